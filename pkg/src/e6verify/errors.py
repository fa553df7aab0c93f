"""Exception hierarchy shared by all modules."""
from __future__ import annotations


class E6VerifyError(Exception):
    """Base class for every error raised by the package."""


class ParseError(E6VerifyError, ValueError):
    """A root token or input file could not be parsed.

    ``line`` and ``column`` are 1-based when known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class NotARootError(E6VerifyError, ValueError):
    """A vector was expected to be a root of E6 but is not."""


class GenerationError(E6VerifyError):
    """A root list does not generate E6 over the integers."""

    def __init__(self, message: str, elementary_divisors: list[int] | None = None):
        self.elementary_divisors = elementary_divisors or []
        super().__init__(message)


class PartitionError(E6VerifyError, ValueError):
    """An orbit partition is not invariant under the given element."""


class DegenerateInput(E6VerifyError, ValueError):
    """Points on the base line are repeated, zero, or otherwise unusable."""


class ShapeError(E6VerifyError, ValueError):
    """A tree shape description is malformed."""
