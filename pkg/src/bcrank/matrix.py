"""Dense matrices over bicomplex and complex scalars.

A bicomplex matrix splits entrywise into two complex component matrices
(the idempotent parts); determinants, singularity and the matrix classes
below are all phrased through that split.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

from . import elimination
from .errors import IndexOutOfRange, NotSquare, OrderTooLarge, ShapeMismatch
from .scalar import (
    Bicomplex,
    GaussianRational,
    ZERO,
    as_bicomplex,
    as_gaussian,
)

IndexSet = tuple[int, ...]


def check_index_set(indices: Sequence[int], bound: int, what: str) -> IndexSet:
    """Validate a strictly increasing, in-bounds index selection."""
    idx = tuple(indices)
    if not idx:
        raise IndexOutOfRange(f"empty {what} index set")
    if any(i < 0 or i >= bound for i in idx):
        raise IndexOutOfRange(f"{what} indices {idx} out of range for size {bound}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise IndexOutOfRange(f"{what} indices {idx} must be strictly increasing")
    return idx


class MatrixClass(Enum):
    """Entrywise classification of a bicomplex matrix.

    E1/E2 matrices have every entry on the corresponding zero-divisor
    line; an e1e2 matrix merely has every entry singular.  GENERAL means
    at least one entry is invertible.
    """

    E1_MATRIX = "e1"
    E2_MATRIX = "e2"
    E1E2_MATRIX = "e1e2"
    GENERAL = "general"


@dataclass(frozen=True, slots=True)
class ComplexMatrix:
    """Immutable dense matrix of Gaussian rationals."""

    rows: int
    cols: int
    entries: tuple[GaussianRational, ...]

    def __init__(self, rows: int, cols: int, entries: Iterable[object]):
        flat = []
        for value in entries:
            g = as_gaussian(value)
            if g is None:
                raise TypeError(f"not a complex scalar: {value!r}")
            flat.append(g)
        if rows < 1 or cols < 1 or len(flat) != rows * cols:
            raise ShapeMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(flat))

    @classmethod
    def from_rows(cls, grid: Sequence[Sequence[object]]) -> "ComplexMatrix":
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        if any(len(row) != cols for row in grid):
            raise ShapeMismatch("ragged rows")
        return cls(rows, cols, [x for row in grid for x in row])

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[GaussianRational, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[GaussianRational, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def grid(self) -> list[list[GaussianRational]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "ComplexMatrix":
        r = check_index_set(row_idx, self.rows, "row")
        c = check_index_set(col_idx, self.cols, "column")
        return ComplexMatrix(len(r), len(c), [self.entry(i, j) for i in r for j in c])

    def rank(self) -> int:
        return elimination.rank(self.grid())

    def determinant(self) -> GaussianRational:
        if self.rows != self.cols:
            raise NotSquare(f"{self.rows}x{self.cols} matrix has no determinant")
        return elimination.determinant(self.grid())

    def __str__(self) -> str:
        return "; ".join(
            ", ".join(str(x) for x in self.row(i)) for i in range(self.rows)
        )


@dataclass(frozen=True, slots=True)
class BicomplexMatrix:
    """Immutable dense bicomplex matrix with row-major entries."""

    rows: int
    cols: int
    entries: tuple[Bicomplex, ...]

    def __init__(self, rows: int, cols: int, entries: Iterable[object]):
        flat = []
        for value in entries:
            b = as_bicomplex(value)
            if b is None:
                raise TypeError(f"not a bicomplex scalar: {value!r}")
            flat.append(b)
        if rows < 1 or cols < 1 or len(flat) != rows * cols:
            raise ShapeMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(flat))

    # -- construction ---------------------------------------------------

    @classmethod
    def from_rows(cls, grid: Sequence[Sequence[object]]) -> "BicomplexMatrix":
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        if any(len(row) != cols for row in grid):
            raise ShapeMismatch("ragged rows")
        return cls(rows, cols, [x for row in grid for x in row])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "BicomplexMatrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "BicomplexMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def from_components(cls, m1: ComplexMatrix, m2: ComplexMatrix) -> "BicomplexMatrix":
        """Assemble the matrix whose idempotent split is (m1, m2)."""
        if (m1.rows, m1.cols) != (m2.rows, m2.cols):
            raise ShapeMismatch(
                f"component shapes differ: {m1.rows}x{m1.cols} vs {m2.rows}x{m2.cols}"
            )
        entries = [
            Bicomplex.from_idempotent(a, b) for a, b in zip(m1.entries, m2.entries)
        ]
        return cls(m1.rows, m1.cols, entries)

    # -- access ----------------------------------------------------------

    def entry(self, i: int, j: int) -> Bicomplex:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Bicomplex, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Bicomplex, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- idempotent structure ---------------------------------------------

    def idempotent_split(self) -> tuple[ComplexMatrix, ComplexMatrix]:
        """Entrywise idempotent parts as two complex matrices."""
        parts = [x.idempotent_parts() for x in self.entries]
        m1 = ComplexMatrix(self.rows, self.cols, [p[0] for p in parts])
        m2 = ComplexMatrix(self.rows, self.cols, [p[1] for p in parts])
        return m1, m2

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "BicomplexMatrix":
        r = check_index_set(row_idx, self.rows, "row")
        c = check_index_set(col_idx, self.cols, "column")
        return BicomplexMatrix(len(r), len(c), [self.entry(i, j) for i in r for j in c])

    def det(self) -> Bicomplex:
        """Determinant assembled from the component determinants."""
        if not self.is_square():
            raise NotSquare(f"{self.rows}x{self.cols} matrix has no determinant")
        m1, m2 = self.idempotent_split()
        return Bicomplex.from_idempotent(m1.determinant(), m2.determinant())

    def det_laplace(self, max_order: int = 6) -> Bicomplex:
        """Determinant by cofactor expansion in bicomplex arithmetic.

        Exponential cost; kept as an independent cross-check of `det`,
        guarded to small orders.
        """
        if not self.is_square():
            raise NotSquare(f"{self.rows}x{self.cols} matrix has no determinant")
        if self.rows > max_order:
            raise OrderTooLarge(
                f"cofactor expansion guarded to order {max_order}, got {self.rows}"
            )
        grid = [list(self.row(i)) for i in range(self.rows)]
        return _laplace(grid)

    def is_singular(self) -> bool:
        """True when the determinant is a zero divisor or zero."""
        return self.det().is_singular()

    def classify(self) -> MatrixClass:
        """Most specific entrywise class; the all-zero matrix is e1e2."""
        if any(not x.is_singular() for x in self.entries):
            return MatrixClass.GENERAL
        all_p2_zero = all(x.in_ideal_e1() for x in self.entries)
        all_p1_zero = all(x.in_ideal_e2() for x in self.entries)
        if all_p1_zero and all_p2_zero:
            return MatrixClass.E1E2_MATRIX
        if all_p2_zero:
            return MatrixClass.E1_MATRIX
        if all_p1_zero:
            return MatrixClass.E2_MATRIX
        return MatrixClass.E1E2_MATRIX

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "BicomplexMatrix") -> "BicomplexMatrix":
        if not isinstance(other, BicomplexMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("addition needs equal shapes")
        return BicomplexMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def __mul__(self, other: "BicomplexMatrix") -> "BicomplexMatrix":
        if not isinstance(other, BicomplexMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            row = self.row(i)
            for j in range(other.cols):
                col = other.col(j)
                acc = ZERO
                for a, b in zip(row, col):
                    acc = acc + a * b
                out.append(acc)
        return BicomplexMatrix(self.rows, other.cols, out)

    def scale(self, scalar: object) -> "BicomplexMatrix":
        s = as_bicomplex(scalar)
        if s is None:
            raise TypeError(f"not a bicomplex scalar: {scalar!r}")
        return BicomplexMatrix(self.rows, self.cols, [s * x for x in self.entries])

    def __str__(self) -> str:
        return "; ".join(
            ", ".join(str(x) for x in self.row(i)) for i in range(self.rows)
        )


def _laplace(grid: list[list[Bicomplex]]) -> Bicomplex:
    n = len(grid)
    if n == 1:
        return grid[0][0]
    total = ZERO
    rest = grid[1:]
    for j, pivot in enumerate(grid[0]):
        if pivot.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in rest]
        term = pivot * _laplace(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def contains_submatrix(
    haystack: BicomplexMatrix | ComplexMatrix,
    needle: BicomplexMatrix | ComplexMatrix,
) -> bool:
    """Whether `needle` arises from `haystack` by deleting rows and columns."""
    if type(haystack) is not type(needle):
        raise TypeError("matrices must be of the same kind")
    if needle.rows > haystack.rows or needle.cols > haystack.cols:
        return False
    for r in combinations(range(haystack.rows), needle.rows):
        for c in combinations(range(haystack.cols), needle.cols):
            if haystack.submatrix(r, c) == needle:
                return True
    return False
