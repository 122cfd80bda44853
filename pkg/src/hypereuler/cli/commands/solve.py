"""``solve``: Euler family of a hypergraph."""

import argparse

from hypereuler.cli.deps import ExitCode, Services, load_hypergraph, write_output
from hypereuler.models.enums import FileFormat, Strategy
from hypereuler.models.incidence import IncidenceGraph
from hypereuler.repositories.family_repository import (
    FamilyRepository,
    serialize_selection,
    serialize_trace,
)
from hypereuler.schemas.family import FamilyDocument, SelectionDocument
from hypereuler.schemas.report import SolveReport
from hypereuler.schemas.trace import ReductionTraceDocument
from hypereuler.services.covering_service import SolveOutcome


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("solve", help="find an Euler family")
    parser.add_argument("file", help="hypergraph file (JSON or text), - for stdin")
    parser.add_argument(
        "--l",
        type=int,
        default=None,
        help="covering parameter; without it, direct solves any hypergraph and reduce assumes 2",
    )
    parser.add_argument(
        "--strategy",
        choices=[s.value for s in Strategy],
        default=Strategy.DIRECT.value,
    )
    parser.add_argument("--format", choices=[f.value for f in FileFormat], default=FileFormat.TEXT.value)
    parser.add_argument("--emit-factor", metavar="PATH", default=None, help="write the selection as JSON to PATH (- for stdout)")
    parser.add_argument("--emit-trace", metavar="PATH", default=None, help="write the reduction trace as JSON to PATH (- for stdout)")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace, services: Services) -> int:
    hypergraph = load_hypergraph(services, args.file)
    strategy = Strategy(args.strategy)

    if args.l is None and strategy is Strategy.DIRECT:
        selection = services.factor.solve_even_two_factor(hypergraph)
        family = None
        if selection is not None:
            family = services.trails.extract_family(
                IncidenceGraph.from_hypergraph(hypergraph), selection
            )
            services.trails.ensure_verified(hypergraph, family)
        outcome = SolveOutcome(
            feasible=family is not None,
            strategy=strategy,
            family=family,
            selection=selection,
        )
    else:
        outcome = services.covering.solve_l_covering(hypergraph, args.l or 2, strategy)

    if outcome.selection is not None and args.emit_factor:
        write_output(serialize_selection(outcome.selection), args.emit_factor)
    if outcome.trace is not None and args.emit_trace:
        write_output(serialize_trace(outcome.trace), args.emit_trace)

    fmt = FileFormat(args.format)
    if fmt is FileFormat.JSON:
        report = SolveReport(
            feasible=outcome.feasible,
            strategy=outcome.strategy.value,
            base_method=outcome.base_method.value if outcome.base_method else None,
            family=FamilyDocument.from_model(outcome.family.normalized()) if outcome.family else None,
            selection=SelectionDocument.from_model(outcome.selection) if outcome.selection else None,
            trace=ReductionTraceDocument.from_model(outcome.trace) if outcome.trace else None,
        )
        write_output(report.to_json() + "\n")
    elif outcome.family is not None:
        write_output(FamilyRepository(hypergraph).serialize(outcome.family, FileFormat.TEXT))

    return ExitCode.OK if outcome.feasible else ExitCode.INFEASIBLE
