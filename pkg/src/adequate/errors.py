"""Exception types shared across the package."""

from __future__ import annotations


class Error(Exception):
    """Base class for every error raised by this package."""


class FormulaError(Error):
    """Malformed formula text; carries the character offset of the fault."""

    def __init__(self, offset: int | None = None, detail: str = ""):
        super().__init__(offset, detail)
        self.offset = offset
        self.detail = detail

    def __str__(self) -> str:
        msg = type(self).__name__
        if self.offset is not None:
            msg += f" at offset {self.offset}"
        if self.detail:
            msg += f": {self.detail}"
        return msg


class UnbalancedParenthesis(FormulaError):
    pass


class UnknownSymbol(FormulaError):
    pass


class DanglingUnary(FormulaError):
    pass


class BareGroup(FormulaError):
    pass


class EmptyNotAllowed(FormulaError):
    pass


class OpNotInSignature(FormulaError):
    pass


class TreeError(Error):
    pass


class NotATree(TreeError):
    pass


class NoTrunk(TreeError):
    pass


class BadVertexId(TreeError):
    pass


class AlphabetMismatch(Error):
    pass
