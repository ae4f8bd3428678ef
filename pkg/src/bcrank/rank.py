"""The four rank notions for bicomplex matrices.

Chain rank is combinatorial: the largest r for which some r x r submatrix
carries a fully nested tower of non-singular square submatrices of orders
1..r.  Because non-singularity is not hereditary in a ring with zero
divisors, this differs from any elimination rank, and a single
non-singular r x r submatrix is NOT enough: the tower must reach all the
way down to an invertible entry.

Row and column rank are dimensions over complex scalars of the row/column
span; they are computed through the dimension-preserving flattening that
sends a bicomplex vector to the concatenation of its two idempotent
parts.  The idempotent ranks are the component-rank sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import elimination
from .errors import GuardExceeded
from .matrix import BicomplexMatrix, ComplexMatrix, MatrixClass
from .scalar import Bicomplex, GaussianRational

DEFAULT_MAX_DIM = 10

IndexPair = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True, slots=True)
class ChainCertificate:
    """A nested tower of index pairs witnessing a chain rank.

    ``levels[k]`` selects a non-singular (k+1) x (k+1) submatrix, and each
    level's row/column sets are contained in the next level's.
    """

    levels: tuple[IndexPair, ...]

    @property
    def order(self) -> int:
        return len(self.levels)

    def to_json_obj(self) -> list[dict[str, list[int]]]:
        return [{"rows": list(r), "cols": list(c)} for r, c in self.levels]


def complex_rank(m: ComplexMatrix) -> int:
    """Rank of a complex matrix (exact elimination)."""
    return m.rank()


def _guard(a: BicomplexMatrix, max_dim: int) -> None:
    if max(a.rows, a.cols) > max_dim:
        raise GuardExceeded(
            f"matrix is {a.rows}x{a.cols}; chain-rank search is guarded to "
            f"max dimension {max_dim} (raise max_dim to override)"
        )


def chain_rank(
    a: BicomplexMatrix, max_dim: int = DEFAULT_MAX_DIM
) -> tuple[int, ChainCertificate | None]:
    """Chain rank with a witnessing certificate (None when the rank is 0).

    Level-wise dynamic programming: level 1 holds the positions of
    invertible entries; level k+1 holds the non-singular (k+1)-order index
    pairs that extend some level-k pair by one row and one column.  Every
    chainable pair contains a chainable pair one order down, so the first
    empty level bounds all higher orders and the scan stops there.
    """
    _guard(a, max_dim)
    level: set[IndexPair] = {
        ((i,), (j,))
        for i in range(a.rows)
        for j in range(a.cols)
        if not a.entry(i, j).is_singular()
    }
    if not level:
        return 0, None
    levels = [level]
    max_order = min(a.rows, a.cols)
    while len(levels) < max_order:
        candidates: set[IndexPair] = set()
        for rows, cols in levels[-1]:
            for i in range(a.rows):
                if i in rows:
                    continue
                new_rows = tuple(sorted(rows + (i,)))
                for j in range(a.cols):
                    if j in cols:
                        continue
                    candidates.add((new_rows, tuple(sorted(cols + (j,)))))
        grown = {rc for rc in candidates if not a.submatrix(*rc).is_singular()}
        if not grown:
            break
        levels.append(grown)
    return len(levels), _select_certificate(levels)


def _select_certificate(levels: list[set[IndexPair]]) -> ChainCertificate:
    # Deterministic pick: lexicographically smallest pair at the top, then
    # the smallest pair nested inside the one above at each lower level.
    chain = [min(levels[-1])]
    for level in reversed(levels[:-1]):
        rows, cols = chain[-1]
        rset, cset = set(rows), set(cols)
        chain.append(
            min(
                rc
                for rc in level
                if set(rc[0]) <= rset and set(rc[1]) <= cset
            )
        )
    chain.reverse()
    return ChainCertificate(tuple(chain))


def validate_certificate(a: BicomplexMatrix, cert: ChainCertificate) -> bool:
    """Recheck a certificate from scratch: shape, nesting, non-singularity."""
    prev: IndexPair | None = None
    for k, (rows, cols) in enumerate(cert.levels, start=1):
        if len(rows) != k or len(cols) != k:
            return False
        if len(set(rows)) != k or len(set(cols)) != k:
            return False
        if any(i < 0 or i >= a.rows for i in rows):
            return False
        if any(j < 0 or j >= a.cols for j in cols):
            return False
        if prev is not None:
            if not (set(prev[0]) <= set(rows) and set(prev[1]) <= set(cols)):
                return False
        if a.submatrix(sorted(rows), sorted(cols)).is_singular():
            return False
        prev = (rows, cols)
    return len(cert.levels) >= 1


def row_flattening(a: BicomplexMatrix) -> list[list[GaussianRational]]:
    """n x 2m grid whose rows are the flattened rows of `a`."""
    m1, m2 = a.idempotent_split()
    return [list(m1.row(i)) + list(m2.row(i)) for i in range(a.rows)]


def column_stacking(a: BicomplexMatrix) -> list[list[GaussianRational]]:
    """2n x m grid whose columns are the flattened columns of `a`."""
    m1, m2 = a.idempotent_split()
    return m1.grid() + m2.grid()


def row_rank(a: BicomplexMatrix) -> int:
    """Dimension over complex scalars of the span of the rows."""
    return elimination.rank(row_flattening(a))


def col_rank(a: BicomplexMatrix) -> int:
    """Dimension over complex scalars of the span of the columns."""
    return elimination.rank(column_stacking(a))


def idem_row_rank(a: BicomplexMatrix) -> int:
    """Dimension of the idempotent row space: rank(1_A) + rank(2_A)."""
    m1, m2 = a.idempotent_split()
    return m1.rank() + m2.rank()


def idem_col_rank(a: BicomplexMatrix) -> int:
    """Dimension of the idempotent column space; equals the row version."""
    return idem_row_rank(a)


@dataclass(frozen=True, slots=True)
class RankReport:
    """All rank data for one matrix, plus determinant and classification."""

    rows: int
    cols: int
    chain_rank: int
    row_rank: int
    col_rank: int
    idem_row_rank: int
    idem_col_rank: int
    rank_1a: int
    rank_2a: int
    det: Bicomplex | None
    det_singular: bool | None
    matrix_class: MatrixClass
    certificate: ChainCertificate | None

    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "chain_rank": self.chain_rank,
            "row_rank": self.row_rank,
            "col_rank": self.col_rank,
            "idem_row_rank": self.idem_row_rank,
            "idem_col_rank": self.idem_col_rank,
            "rank_1A": self.rank_1a,
            "rank_2A": self.rank_2a,
            "det": None if self.det is None else self.det.format_literal(),
            "det_singular": self.det_singular,
            "matrix_class": self.matrix_class.value,
            "certificate": None
            if self.certificate is None
            else self.certificate.to_json_obj(),
        }


def rank_report(a: BicomplexMatrix, max_dim: int = DEFAULT_MAX_DIM) -> RankReport:
    """Compute every rank notion (and determinant, when square) at once."""
    m1, m2 = a.idempotent_split()
    r1, r2 = m1.rank(), m2.rank()
    chain, cert = chain_rank(a, max_dim=max_dim)
    det = a.det() if a.is_square() else None
    return RankReport(
        rows=a.rows,
        cols=a.cols,
        chain_rank=chain,
        row_rank=row_rank(a),
        col_rank=col_rank(a),
        idem_row_rank=r1 + r2,
        idem_col_rank=r1 + r2,
        rank_1a=r1,
        rank_2a=r2,
        det=det,
        det_singular=None if det is None else det.is_singular(),
        matrix_class=a.classify(),
        certificate=cert,
    )


def square_subpairs(rows: int, cols: int, order: int):
    """All (row set, column set) index pairs of the given square order."""
    for r in combinations(range(rows), order):
        for c in combinations(range(cols), order):
            yield r, c
