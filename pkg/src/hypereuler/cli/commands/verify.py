"""``verify``: check an Euler family certificate."""

import argparse

from hypereuler.cli.deps import ExitCode, Services, load_hypergraph, write_output
from hypereuler.repositories.family_repository import FamilyRepository
from hypereuler.schemas.family import VerdictDocument


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="verify an Euler family against a hypergraph")
    parser.add_argument("file", help="hypergraph file (JSON or text)")
    parser.add_argument("--family", required=True, help="family file (text or JSON)")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace, services: Services) -> int:
    hypergraph = load_hypergraph(services, args.file)
    family = FamilyRepository(hypergraph).read(args.family)
    verdict = services.trails.verify_family(hypergraph, family)
    write_output(VerdictDocument.from_model(verdict).to_json() + "\n")
    return ExitCode.OK if verdict.accepted else ExitCode.REJECTED
