"""Exception types shared across the toolkit."""

from __future__ import annotations


class ValidationError(ValueError):
    """A value or structure violates an invariant (range, arity, namespace)."""


class ParseError(ValueError):
    """Malformed concrete syntax.  Carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class BudgetExceededError(RuntimeError):
    """An enumeration or construction hit its configured cap before finishing."""
