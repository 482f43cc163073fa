"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class ScopError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ScopError, ValueError):
    """Malformed or inconsistent input (bad names, mismatched tables, ...)."""


class UnknownIdentifierError(ScopError, KeyError):
    """An identifier that is not a member of the relevant set."""

    def __init__(self, kind: str, ident: object):
        self.kind = kind
        self.ident = ident
        super().__init__(f"unknown {kind}: {ident!r}")

    def __str__(self) -> str:
        return self.args[0]


class DomainError(ScopError, ValueError):
    """The operation is undefined for the given (valid) arguments."""


class DegenerateColumnError(DomainError):
    pass


class StructureError(InputError):
    """A table that is empty, ragged or has duplicate/missing cells."""


class RatingParseError(InputError):
    """A cell that is non-numeric or outside the rating scale."""

    def __init__(self, message: str, row: int, column: str | int):
        self.row = row
        self.column = column
        super().__init__(f"{message} (row {row}, column {column})")


class NoUniqueBound(ScopError):
    """Raised by meet/join when the bound set has no single extremal element.

    ``candidates`` holds the maximal lower bounds (for a meet) or the
    minimal upper bounds (for a join).
    """

    def __init__(self, kind: str, left, right, candidates):
        self.kind = kind
        self.left = left
        self.right = right
        self.candidates = tuple(candidates)
        shown = ", ".join(str(c) for c in self.candidates)
        super().__init__(f"no unique {kind} of {left} and {right}; candidates: {{{shown}}}")
