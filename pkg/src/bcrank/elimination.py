"""Exact Gaussian elimination over Gaussian-rational grids.

The routines below are the single linear-algebra kernel shared by the
rank computations, subspace canonicalization and span-membership solving.
Grids are plain sequences of sequences of :class:`GaussianRational`; all
arithmetic is exact, so rank and consistency decisions are decisions, not
estimates.
"""

from __future__ import annotations

from typing import Sequence

from .scalar import GR_ONE, GR_ZERO, GaussianRational

Grid = Sequence[Sequence[GaussianRational]]


def _mutable(grid: Grid) -> list[list[GaussianRational]]:
    return [list(row) for row in grid]


def rank(grid: Grid) -> int:
    """Rank of a complex matrix by forward elimination."""
    if not grid or not grid[0]:
        return 0
    a = _mutable(grid)
    n_rows, n_cols = len(a), len(a[0])
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if not a[i][c].is_zero()), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = GR_ONE / a[r][c]
        for i in range(r + 1, n_rows):
            if a[i][c].is_zero():
                continue
            factor = a[i][c] * inv
            for j in range(c, n_cols):
                a[i][j] = a[i][j] - factor * a[r][j]
        r += 1
        if r == n_rows:
            break
    return r


def rref(grid: Grid) -> tuple[list[list[GaussianRational]], list[int]]:
    """Reduced row-echelon form.

    Returns (nonzero reduced rows, pivot column indices).  Pivots are
    normalized to 1 and cleared above and below, so the nonzero rows are a
    canonical basis of the row space.
    """
    if not grid or not grid[0]:
        return [], []
    a = _mutable(grid)
    n_rows, n_cols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if not a[i][c].is_zero()), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = GR_ONE / a[r][c]
        a[r] = [entry * inv for entry in a[r]]
        for i in range(n_rows):
            if i == r or a[i][c].is_zero():
                continue
            factor = a[i][c]
            a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return a[:r], pivots


def determinant(grid: Grid) -> GaussianRational:
    """Determinant by fraction-free (Bareiss) elimination.

    Each elimination step divides by the previous pivot, which is exact:
    the intermediate entries are themselves minors of the input.  Row
    swaps flip the sign; a column with no pivot means determinant zero.
    """
    n = len(grid)
    if n == 0 or any(len(row) != n for row in grid):
        raise ValueError("determinant requires a square grid")
    a = _mutable(grid)
    sign = 1
    prev = GR_ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot is None:
                return GR_ZERO
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = GR_ZERO
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def solve_in_span(
    vectors: Sequence[Sequence[GaussianRational]],
    target: Sequence[GaussianRational],
) -> list[GaussianRational] | None:
    """Coefficients x with sum(x[i] * vectors[i]) == target, or None.

    Inconsistent systems return None.  Free coefficients are set to zero,
    so when the vectors are independent the answer is the unique one.
    """
    n = len(target)
    if any(len(v) != n for v in vectors):
        raise ValueError("span vectors must match the target length")
    if not vectors:
        return [] if all(t.is_zero() for t in target) else None
    # Columns are the span vectors, augmented with the target.
    augmented = [[v[i] for v in vectors] + [target[i]] for i in range(n)]
    reduced, pivots = rref(augmented)
    g = len(vectors)
    if g in pivots:
        return None
    coeffs = [GR_ZERO] * g
    for row, p in zip(reduced, pivots):
        coeffs[p] = row[g]
    return coeffs
