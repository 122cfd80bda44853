"""Solver settings using Pydantic Settings."""

from functools import lru_cache

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Solver settings loaded from environment variables.

    Every field can be overridden with a ``HYPEREULER_`` prefixed variable;
    CLI flags take precedence over both.
    """

    model_config = SettingsConfigDict(
        env_prefix="HYPEREULER_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "hypereuler"

    # Logging
    log_level: str = "WARNING"
    log_format: str = "json"

    # Instance-size guards
    cover_guard_max_n: int = 64
    cover_guard_max_l: int = 4
    brute_force_guard: int = 10**7
    tour_budget: int = 10**6
    audit_exhaustive_guard: int = 10**6
    x_condition_exhaustive_guard: int = 2**16

    # Sampling
    x_condition_samples: int = 4096
    audit_samples: int = 10**4
    audit_seed: int = 0
    prng: str = "PCG64"

    # Corpus
    corpus_workers: int = 1
    corpus_size_cap: int = 24

    @field_validator(
        "cover_guard_max_n",
        "cover_guard_max_l",
        "brute_force_guard",
        "tour_budget",
        "audit_exhaustive_guard",
        "x_condition_exhaustive_guard",
        "x_condition_samples",
        "audit_samples",
        "corpus_workers",
        "corpus_size_cap",
    )
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """Guards, budgets and sample counts must be positive."""
        if v < 1:
            raise ValueError("must be a positive integer")
        return v

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        """Only json and text log lines are supported."""
        v = v.lower()
        if v not in {"json", "text"}:
            raise ValueError("log_format must be 'json' or 'text'")
        return v

    @field_validator("prng")
    @classmethod
    def validate_prng(cls, v: str) -> str:
        """Only PCG64 is supported."""
        if v != "PCG64":
            raise ValueError("only the PCG64 generator is supported")
        return v


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


settings = get_settings()
