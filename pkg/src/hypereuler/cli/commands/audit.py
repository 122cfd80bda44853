"""``audit``: minimum of the Lovasz functional."""

import argparse

from hypereuler.cli.deps import ExitCode, Services, load_hypergraph, write_output
from hypereuler.models.enums import AuditMode


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("audit", help="gamma(S, T) audit as JSON")
    parser.add_argument("file", help="hypergraph file (JSON or text), - for stdin")
    parser.add_argument("--mode", choices=[m.value for m in AuditMode], default=AuditMode.EXHAUSTIVE_E.value)
    parser.add_argument("--r", type=int, default=None, help="loops per vertex; default 2(m+n)^2")
    parser.add_argument("--samples", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.set_defaults(func=run)


def run(args: argparse.Namespace, services: Services) -> int:
    hypergraph = load_hypergraph(services, args.file)
    report = services.analysis.audit_lovasz(
        hypergraph,
        mode=AuditMode(args.mode),
        r=args.r,
        samples=args.samples,
        seed=args.seed,
    )
    write_output(report.to_json() + "\n")
    return ExitCode.OK
