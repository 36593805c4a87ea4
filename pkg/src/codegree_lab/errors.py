"""Exception types and resource caps shared across the package."""

import os


class InputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class ResourceLimitError(RuntimeError):
    """Raised when a request exceeds a configured size cap."""


class ConsistencyError(AssertionError):
    """An internally derived object failed its own re-verification."""


class BudgetExhausted(RuntimeError):
    """A backtracking search hit its node budget before deciding.

    The search result is indeterminate: neither a witness nor a proof of
    absence was obtained.
    """

    def __init__(self, nodes: int, budget: int):
        super().__init__(f"search budget exhausted after {nodes} nodes (budget {budget})")
        self.nodes = nodes
        self.budget = budget


def max_n(default: int) -> int:
    """Vertex cap, overridable through ``CODEGREE_LAB_MAX_N``."""
    raw = os.environ.get("CODEGREE_LAB_MAX_N")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"CODEGREE_LAB_MAX_N must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError("CODEGREE_LAB_MAX_N must be positive")
    return value
