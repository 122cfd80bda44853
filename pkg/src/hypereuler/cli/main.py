"""Command-line entry point."""

import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError as PydanticValidationError

from hypereuler import __version__
from hypereuler.cli.commands import COMMANDS
from hypereuler.cli.deps import ExitCode, build_services
from hypereuler.config.settings import Settings, get_settings
from hypereuler.core.exceptions import HypereulerError
from hypereuler.core.logging import command_audit, configure_logging
from hypereuler.schemas.base import ErrorDetail, ErrorResponse

logger = logging.getLogger("hypereuler.cli")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypereuler",
        allow_abbrev=False,
        description="Euler families of hypergraphs: solve, verify, audit, generate.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="override HYPEREULER_LOG_LEVEL")
    parser.add_argument("--log-format", choices=["json", "text"], default=None)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def _settings_from(args: argparse.Namespace) -> Settings:
    overrides = {}
    if args.log_level:
        overrides["log_level"] = args.log_level
    if args.log_format:
        overrides["log_format"] = args.log_format
    settings = get_settings()
    return settings.model_copy(update=overrides) if overrides else settings


def _report_error(response: ErrorResponse) -> None:
    sys.stderr.write(response.to_json() + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand and return its exit code.

    Domain errors become a JSON ``ErrorResponse`` on stderr with the error's
    exit code; anything unexpected exits 70.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = _settings_from(args)
    configure_logging(settings)
    services = build_services(settings)

    with command_audit(args.command) as entry:
        try:
            code = int(args.func(args, services))
        except HypereulerError as exc:
            _report_error(
                ErrorResponse(
                    code=exc.code,
                    message=exc.message,
                    errors=[ErrorDetail(**error) for error in exc.errors],
                    run_id=entry["run_id"],
                )
            )
            code = exc.exit_code
        except PydanticValidationError as exc:
            _report_error(
                ErrorResponse(
                    code="VALIDATION_ERROR",
                    message="Invalid input data",
                    errors=[
                        ErrorDetail(
                            field=".".join(str(loc) for loc in error["loc"]) or None,
                            message=error["msg"],
                        )
                        for error in exc.errors()
                    ],
                    run_id=entry["run_id"],
                )
            )
            code = ExitCode.INPUT_ERROR
        except Exception as exc:
            logger.exception("unexpected error in %s", args.command)
            _report_error(
                ErrorResponse(code="INTERNAL_ERROR", message=str(exc), run_id=entry["run_id"])
            )
            code = ExitCode.INTERNAL_ERROR
        entry["exit_code"] = code
        if code not in (ExitCode.OK, ExitCode.REJECTED, ExitCode.INFEASIBLE):
            entry["status"] = "error"
        elif code != ExitCode.OK:
            entry["status"] = "negative"
    return code


if __name__ == "__main__":
    sys.exit(main())
