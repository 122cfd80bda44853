"""Unit tests for logging setup and command audit entries."""

import json
import logging

import pytest

from hypereuler.config.settings import Settings
from hypereuler.core.logging import JsonFormatter, TextFormatter, command_audit, configure_logging


def make_record(audit: dict) -> logging.LogRecord:
    record = logging.LogRecord("hypereuler.audit", logging.INFO, __file__, 1, "command finished", None, None)
    record.audit = audit
    return record


class TestFormatters:
    """Test log line rendering."""

    def test_json_merges_audit_fields(self):
        """Test audit fields appear at the top level of JSON lines."""
        line = JsonFormatter().format(make_record({"run_id": "r1", "command": "solve"}))
        entry = json.loads(line)
        assert entry["run_id"] == "r1"
        assert entry["command"] == "solve"
        assert entry["level"] == "INFO"

    def test_text_summary(self):
        """Test the compact text form of audit entries."""
        record = make_record(
            {"run_id": "r1", "command": "tour", "status": "ok", "duration_ms": 1.5}
        )
        assert TextFormatter().format(record) == "[r1] tour - ok (1.5ms)"


class TestCommandAudit:
    """Test the command audit context manager."""

    def test_entry_recorded(self, caplog):
        """Test one audit entry with timing is logged."""
        configure_logging(Settings(_env_file=None, log_level="INFO"))
        logger = logging.getLogger("hypereuler")
        logger.propagate = True
        try:
            with caplog.at_level(logging.INFO, logger="hypereuler.audit"):
                with command_audit("check", file="h.json") as entry:
                    entry["status"] = "ok"
        finally:
            logger.propagate = False
        records = [r for r in caplog.records if r.name == "hypereuler.audit"]
        assert len(records) == 1
        assert records[0].audit["command"] == "check"
        assert records[0].audit["file"] == "h.json"
        assert "duration_ms" in records[0].audit

    def test_error_status_on_exception(self):
        """Test exceptions mark the entry as an error and propagate."""
        with pytest.raises(RuntimeError):
            with command_audit("solve") as entry:
                raise RuntimeError("boom")
        assert entry["status"] == "error"
        assert entry["error"] == "RuntimeError"
