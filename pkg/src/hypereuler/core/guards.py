"""Instance-size guards for exhaustive operations."""

from hypereuler.core.exceptions import GuardExceededError


def ensure_within(guard: str, value: int, limit: int) -> None:
    """Raise GuardExceededError if value exceeds limit."""
    if value > limit:
        raise GuardExceededError(guard, value, limit)
