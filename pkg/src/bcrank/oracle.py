"""Brute-force references and seeded random instance generation.

The reference implementations recompute chain rank, row rank and
determinants by definition-level enumeration with no shared shortcuts, so
they can arbitrate against the production engine.  The generators use a
fixed, documented counter-based stream (SplitMix64) rather than the
standard library RNG: sequences must be reproducible from the seed alone,
independently of interpreter version, and sub-streams must be derivable
per task without sharing state.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from . import elimination, rank as rank_engine
from .errors import (
    GuardExceeded,
    NotSquare,
    OrderTooLarge,
    RejectionLimitExceeded,
)
from .matrix import BicomplexMatrix
from .scalar import Bicomplex, GaussianRational, ZERO

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    """SplitMix64 finalizer: a bijective 64-bit scramble."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Counter-based pseudo-random stream.

    State advances by the 64-bit golden-ratio constant and each output is
    the mixed counter, so the n-th draw is a pure function of (seed, n).
    `child(i)` derives an independent stream from the initial seed and an
    index, which keeps parallel generation deterministic.
    """

    def __init__(self, seed: int):
        self._seed0 = seed & _MASK64
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (modulo reduction; the tiny
        bias is irrelevant for test-instance generation)."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def chance(self, probability: float) -> bool:
        """True with the given probability (compared against a u64 draw)."""
        threshold = int(probability * float(1 << 64))
        return self.next_u64() < threshold

    def child(self, index: int) -> "SplitMix64":
        return SplitMix64(_mix64((self._seed0 + _GOLDEN * (index + 1)) & _MASK64))


@dataclass(frozen=True, slots=True)
class GenParams:
    """Knobs for random bicomplex instances.

    coeff_bound caps the absolute value of the Gaussian-integer idempotent
    parts; singular_density is the probability that an entry is forced
    onto a zero-divisor line.
    """

    coeff_bound: int = 3
    singular_density: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.coeff_bound < 1:
            raise ValueError("coeff_bound must be >= 1")
        if not 0.0 <= self.singular_density <= 1.0:
            raise ValueError("singular_density must lie in [0, 1]")


def _gaussian_int(stream: SplitMix64, bound: int, nonzero: bool) -> GaussianRational:
    while True:
        re = stream.randint(-bound, bound)
        im = stream.randint(-bound, bound)
        if not nonzero or re != 0 or im != 0:
            return GaussianRational(re, im)


def random_bicomplex(params: GenParams, stream: SplitMix64) -> Bicomplex:
    """One random scalar; parts are Gaussian integers within the bound."""
    if stream.chance(params.singular_density):
        keep_first = stream.next_u64() % 2 == 0
        part = _gaussian_int(stream, params.coeff_bound, nonzero=False)
        if keep_first:
            return Bicomplex.from_idempotent(part, 0)
        return Bicomplex.from_idempotent(0, part)
    p1 = _gaussian_int(stream, params.coeff_bound, nonzero=True)
    p2 = _gaussian_int(stream, params.coeff_bound, nonzero=True)
    return Bicomplex.from_idempotent(p1, p2)


def random_matrix(
    n: int, m: int, params: GenParams, stream: SplitMix64 | None = None
) -> BicomplexMatrix:
    """Random n x m matrix; a fresh stream is seeded from params when omitted."""
    if n < 1 or m < 1:
        raise ValueError("matrix dimensions must be >= 1")
    if stream is None:
        stream = SplitMix64(params.seed)
    return BicomplexMatrix(n, m, [random_bicomplex(params, stream) for _ in range(n * m)])


def random_invertible_entry_matrix(
    n: int,
    params: GenParams,
    stream: SplitMix64 | None = None,
    max_rejections: int = 1000,
) -> tuple[BicomplexMatrix, int]:
    """Random n x n matrix with every entry invertible and det not singular.

    Rejection-samples whole matrices until the determinant is invertible;
    returns the matrix and the number of rejected draws.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if stream is None:
        stream = SplitMix64(params.seed)
    rejections = 0
    while True:
        entries = [
            Bicomplex.from_idempotent(
                _gaussian_int(stream, params.coeff_bound, nonzero=True),
                _gaussian_int(stream, params.coeff_bound, nonzero=True),
            )
            for _ in range(n * n)
        ]
        candidate = BicomplexMatrix(n, n, entries)
        if not candidate.is_singular():
            return candidate, rejections
        rejections += 1
        if rejections > max_rejections:
            raise RejectionLimitExceeded(
                f"no invertible-entry matrix with invertible determinant "
                f"after {max_rejections} draws"
            )


# -- reference computations ----------------------------------------------


def chain_rank_reference(a: BicomplexMatrix, max_dim: int = 5) -> int:
    """Chain rank by naive top-down recursion over all index towers.

    No memoization and no sharing with the engine's level-wise search;
    cost is super-exponential, hence the small guard.
    """
    if max(a.rows, a.cols) > max_dim:
        raise GuardExceeded(
            f"reference chain rank is guarded to max dimension {max_dim}"
        )
    best = 0
    for order in range(1, min(a.rows, a.cols) + 1):
        for rows in combinations(range(a.rows), order):
            for cols in combinations(range(a.cols), order):
                if _has_tower(a, rows, cols):
                    best = order
                    break
            else:
                continue
            break
    return best


def _has_tower(a: BicomplexMatrix, rows: tuple[int, ...], cols: tuple[int, ...]) -> bool:
    if a.submatrix(rows, cols).is_singular():
        return False
    k = len(rows)
    if k == 1:
        return True
    return any(
        _has_tower(a, sub_r, sub_c)
        for sub_r in combinations(rows, k - 1)
        for sub_c in combinations(cols, k - 1)
    )


def row_rank_reference(a: BicomplexMatrix) -> int:
    """Row rank by greedily growing an independent set of flattened rows."""
    chosen: list[list[GaussianRational]] = []
    for flat_row in rank_engine.row_flattening(a):
        if elimination.solve_in_span(chosen, flat_row) is None:
            chosen.append(flat_row)
    return len(chosen)


def det_reference(a: BicomplexMatrix, max_order: int = 4) -> Bicomplex:
    """Determinant as the signed sum over all permutations."""
    if not a.is_square():
        raise NotSquare(f"{a.rows}x{a.cols} matrix has no determinant")
    if a.rows > max_order:
        raise OrderTooLarge(
            f"permutation-sum determinant guarded to order {max_order}"
        )
    n = a.rows
    total = ZERO
    for perm in permutations(range(n)):
        term = a.entry(0, perm[0])
        for i in range(1, n):
            term = term * a.entry(i, perm[i])
        total = total + (term if _parity(perm) == 0 else -term)
    return total


def _parity(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return inversions % 2
