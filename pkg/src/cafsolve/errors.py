"""Exception types shared across the package."""

from __future__ import annotations


class CafError(Exception):
    """Base class for all errors raised by this package."""


class InvariantViolation(CafError):
    """A structural invariant of a framework or formula was violated."""


class DomainError(CafError, ValueError):
    """An operation was called with arguments outside its domain."""


class ParseError(CafError):
    """A syntax or consistency error in an instance file.

    Carries the 1-based line (and, for syntax errors, column) of the
    offending statement.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class BudgetExceededError(CafError):
    """A search or count exceeded the configured resource budget."""
