"""``corpus``: run the reproduction corpus."""

import argparse
import json

from pydantic import ValidationError as PydanticValidationError

from hypereuler.cli.deps import ExitCode, Services, write_output
from hypereuler.core.exceptions import ParseError
from hypereuler.repositories.base import read_text
from hypereuler.schemas.corpus import CorpusSpec
from hypereuler.services.corpus_service import default_corpus

DEFAULT_SPEC = "default"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("corpus", help="run a corpus spec and print the summary")
    parser.add_argument("spec", help=f"corpus spec JSON file, or '{DEFAULT_SPEC}'")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--rows", metavar="PATH", default=None, help="also write one JSON row per line")
    parser.set_defaults(func=run)


def load_spec(path: str) -> CorpusSpec:
    try:
        return CorpusSpec.model_validate(json.loads(read_text(path)))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    except PydanticValidationError as exc:
        raise ParseError(f"invalid corpus spec: {exc.errors()[0]['msg']}") from exc


def run(args: argparse.Namespace, services: Services) -> int:
    spec = default_corpus(services.settings) if args.spec == DEFAULT_SPEC else load_spec(args.spec)
    if args.workers is not None:
        spec = spec.model_copy(update={"workers": args.workers})
    summary = services.corpus.run_corpus(spec)
    if args.rows:
        write_output("".join(row.to_json() + "\n" for row in summary.rows), args.rows)
    write_output(summary.to_json() + "\n")
    return ExitCode.OK if summary.passed else ExitCode.REJECTED
