"""``tour``: exact Euler tour search."""

import argparse

from hypereuler.cli.deps import ExitCode, Services, load_hypergraph, write_output
from hypereuler.models.enums import TourStatus
from hypereuler.schemas.family import TrailDocument
from hypereuler.schemas.report import TourReport

EXIT_CODES = {
    TourStatus.FOUND: ExitCode.OK,
    TourStatus.NONE: ExitCode.INFEASIBLE,
    TourStatus.BUDGET_EXCEEDED: ExitCode.BUDGET_EXCEEDED,
}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("tour", help="exact Euler tour search (small instances)")
    parser.add_argument("file", help="hypergraph file (JSON or text), - for stdin")
    parser.add_argument("--budget", type=int, default=None, help="search-node limit")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace, services: Services) -> int:
    hypergraph = load_hypergraph(services, args.file)
    outcome = services.trails.euler_tour_exact(hypergraph, args.budget)
    report = TourReport(
        status=outcome.status,
        explored=outcome.explored,
        budget=outcome.budget,
        trail=TrailDocument.from_model(outcome.trail.normalized()) if outcome.trail else None,
    )
    write_output(report.to_json() + "\n")
    return EXIT_CODES[outcome.status]
