"""Logging setup and per-command audit entries."""

import json
import logging
import sys
import time
import uuid
from contextlib import contextmanager
from datetime import datetime, timezone
from typing import Any, Iterator, Optional

from hypereuler.config.settings import Settings, settings as default_settings

ROOT_LOGGER = "hypereuler"

audit_logger = logging.getLogger(f"{ROOT_LOGGER}.audit")


class JsonFormatter(logging.Formatter):
    """Render records as one JSON object per line."""

    def format(self, record: logging.LogRecord) -> str:
        entry: dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created, timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        extra = getattr(record, "audit", None)
        if extra:
            entry.update(extra)
        if record.exc_info:
            entry["exc_info"] = self.formatException(record.exc_info)
        return json.dumps(entry, default=str)


class TextFormatter(logging.Formatter):
    """Human-readable lines; audit entries get a compact summary."""

    def format(self, record: logging.LogRecord) -> str:
        entry = getattr(record, "audit", None)
        if entry:
            return (
                f"[{entry['run_id']}] {entry['command']} "
                f"- {entry['status']} ({entry['duration_ms']}ms)"
            )
        return f"{record.levelname} {record.name}: {record.getMessage()}"


def configure_logging(settings: Optional[Settings] = None) -> None:
    """Install a single stderr handler on the package logger.

    stdout is reserved for command output.
    """
    settings = settings or default_settings
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    if settings.log_format == "json":
        handler.setFormatter(JsonFormatter())
    else:
        handler.setFormatter(TextFormatter())
    logger.addHandler(handler)
    logger.setLevel(settings.log_level.upper())
    logger.propagate = False


@contextmanager
def command_audit(command: str, **fields: Any) -> Iterator[dict[str, Any]]:
    """Time a command and emit one audit entry when it finishes.

    The yielded dict may be updated by the command (for example with a
    ``status`` or result fields) before the entry is written.
    """
    entry: dict[str, Any] = {
        "run_id": str(uuid.uuid4()),
        "command": command,
        "status": "ok",
        **fields,
    }
    start_time = time.perf_counter()
    try:
        yield entry
    except Exception as exc:
        entry["status"] = "error"
        entry["error"] = type(exc).__name__
        raise
    finally:
        entry["duration_ms"] = round((time.perf_counter() - start_time) * 1000, 2)
        level = logging.WARNING if entry["status"] == "error" else logging.INFO
        audit_logger.log(level, "command finished", extra={"audit": entry})
