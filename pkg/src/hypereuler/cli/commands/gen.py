"""``gen``: instance generators."""

import argparse

from hypereuler.cli.deps import ExitCode, Services, write_output
from hypereuler.models.enums import FileFormat, GeneratorKind
from hypereuler.schemas.corpus import GeneratorSpec


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("gen", help="generate a hypergraph")
    parser.add_argument("--kind", choices=[k.value for k in GeneratorKind], required=True)
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--k", type=int, default=None)
    parser.add_argument("--l", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--name", default=None, help="named instance, e.g. design_4_6")
    parser.add_argument("--format", choices=[f.value for f in FileFormat], default=FileFormat.JSON.value)
    parser.set_defaults(func=run)


def run(args: argparse.Namespace, services: Services) -> int:
    if args.kind == GeneratorKind.NAMED.value and args.name is not None:
        # unknown names surface as UnknownGeneratorError, not a schema error
        hypergraph = services.generator.gen_named(args.name)
    else:
        spec = GeneratorSpec(
            kind=args.kind, n=args.n, k=args.k, l=args.l, seed=args.seed, name=args.name
        )
        hypergraph = services.generator.generate(spec)
    write_output(services.hypergraphs.serialize(hypergraph, FileFormat(args.format)))
    return ExitCode.OK
