"""CLI subcommands; each module exposes ``register(subparsers)``."""

from hypereuler.cli.commands import audit, check, corpus, gen, solve, tour, verify

COMMANDS = [check, solve, tour, verify, gen, audit, corpus]

__all__ = ["COMMANDS"]
