"""Exception types shared across the package."""

from __future__ import annotations


class BCRankError(Exception):
    """Base class for all bcrank errors."""


class NotInvertible(BCRankError):
    """Raised when inverting a singular bicomplex number."""


class ShapeMismatch(BCRankError):
    """Raised when matrix shapes are not conformable."""


class NotSquare(BCRankError):
    """Raised when a square matrix is required."""


class IndexOutOfRange(BCRankError):
    """Raised when a row or column index set is invalid for its matrix."""


class OrderTooLarge(BCRankError):
    """Raised when a brute-force routine is asked to exceed its order guard."""


class GuardExceeded(BCRankError):
    """Raised when a matrix exceeds the combinatorial dimension guard.

    The guard exists because chain-rank search enumerates square index
    sets; callers may raise the limit explicitly when they accept the cost.
    """


class RejectionLimitExceeded(BCRankError):
    """Raised when rejection sampling fails to produce an instance in time."""


class DimensionMismatch(BCRankError):
    """Raised when vectors or subspaces live in different ambient dimensions."""


class ParseError(BCRankError):
    """Matrix text that does not conform to the input grammar.

    Carries 1-based line/column of the offending token.
    """

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message
