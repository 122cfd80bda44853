"""Tests for solver settings."""

import pytest
from pydantic import ValidationError

from hypereuler.config.settings import Settings


class TestSettings:
    def test_defaults(self):
        settings = Settings(_env_file=None)
        assert settings.log_format == "json"
        assert settings.cover_guard_max_l == 4
        assert settings.brute_force_guard == 10**7
        assert settings.x_condition_exhaustive_guard == 2**16
        assert settings.prng == "PCG64"

    def test_environment_override(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("HYPEREULER_LOG_FORMAT", "TEXT")
        monkeypatch.setenv("HYPEREULER_TOUR_BUDGET", "500")
        settings = Settings(_env_file=None)
        assert settings.log_format == "text"
        assert settings.tour_budget == 500

    def test_rejects_unknown_log_format(self):
        with pytest.raises(ValidationError):
            Settings(_env_file=None, log_format="xml")

    @pytest.mark.parametrize("field", ["brute_force_guard", "audit_samples", "corpus_workers"])
    def test_rejects_non_positive_guards(self, field: str):
        with pytest.raises(ValidationError):
            Settings(_env_file=None, **{field: 0})

    def test_rejects_other_generators(self):
        with pytest.raises(ValidationError):
            Settings(_env_file=None, prng="MT19937")
