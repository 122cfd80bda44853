"""``check``: structural report."""

import argparse

from hypereuler.cli.deps import ExitCode, Services, load_hypergraph, write_output


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "check",
        help="structural report: uniformity, covering, components, cut edges",
    )
    parser.add_argument("file", help="hypergraph file (JSON or text), - for stdin")
    parser.add_argument("--l", type=int, default=None, help="also check l-covering")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace, services: Services) -> int:
    """Exit 0 iff H is connected, has no cut edges and, with --l, is l-covering."""
    hypergraph = load_hypergraph(services, args.file)
    report = services.structure.structure_report(hypergraph, l=args.l)
    write_output(report.to_json() + "\n")
    return ExitCode.OK if report.predicates_hold else ExitCode.REJECTED
