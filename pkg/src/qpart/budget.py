"""Global guard on the size of exhaustive enumerations."""

from contextlib import contextmanager

from .errors import BudgetExceeded

DEFAULT_BUDGET = 10**7

_budget = DEFAULT_BUDGET


def get_budget() -> int:
    return _budget


def set_budget(limit: int) -> None:
    global _budget
    if limit < 1:
        raise ValueError("budget must be positive")
    _budget = int(limit)


@contextmanager
def enumeration_budget(limit: int):
    """Temporarily override the enumeration budget."""
    old = get_budget()
    set_budget(limit)
    try:
        yield
    finally:
        set_budget(old)


def check_budget(count: int, what: str = "objects") -> None:
    if count > _budget:
        raise BudgetExceeded(f"enumerating {count} {what} exceeds budget {_budget}")
