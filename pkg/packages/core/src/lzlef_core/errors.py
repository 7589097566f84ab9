"""Exception hierarchy shared by every lozenge-lefschetz package."""

from __future__ import annotations


class LzlefError(Exception):
    """Base class for all library errors."""


class ParseError(LzlefError, ValueError):
    """A monomial, ideal or parameter literal could not be parsed."""

    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class PreconditionError(LzlefError, ValueError):
    """An operation was called outside the inputs it is defined for."""


class ConsistencyError(LzlefError, RuntimeError):
    """Two independent computations disagreed. Always a bug."""
