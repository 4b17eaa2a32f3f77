"""Exception types shared across the package."""

from __future__ import annotations

import os

DEFAULT_BUDGET = 1 << 20
BUDGET_ENV = "HYPERFORGE_BUDGET"


class HyperforgeError(Exception):
    """Base class for all package errors."""


class PreconditionError(HyperforgeError, ValueError):
    """An operation was called on input outside its domain."""


class FormatError(HyperforgeError, ValueError):
    """A hypergraph or SPS file could not be parsed."""


class BudgetExceeded(HyperforgeError):
    """A search hit its node budget before finishing.

    ``best`` and ``witness`` carry the best answer found so far, if any; the
    answer is not certified optimal.
    """

    def __init__(self, message: str, *, visited: int, best=None, witness=None):
        super().__init__(message)
        self.visited = visited
        self.best = best
        self.witness = witness


def resolve_budget(budget: int | None, default: int = DEFAULT_BUDGET) -> int:
    """Explicit budget wins, then ``HYPERFORGE_BUDGET``, then ``default``."""
    if budget is not None:
        if budget < 1:
            raise PreconditionError("budget must be positive")
        return budget
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise PreconditionError(f"{BUDGET_ENV} must be an integer, got {env!r}") from None
        if value < 1:
            raise PreconditionError(f"{BUDGET_ENV} must be positive")
        return value
    return default
