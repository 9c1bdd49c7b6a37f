"""Exception types shared across the package."""
from __future__ import annotations


class SettleError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SettleError):
    """Raised when grid text or JSON cannot be parsed.

    Carries 1-based line/column coordinates when they are known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


class LimitError(SettleError):
    """Raised when a solve request exceeds a configured resource cap."""
