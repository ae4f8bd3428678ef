"""Built-in worked examples with known exact answers.

These small matrices pin down the behaviours that make bicomplex rank
theory differ from the complex case: a non-singular matrix with chain
rank zero, matrices whose chain, row and column ranks are pairwise
different, independent rows with a singular determinant, and component
submatrices that do not reassemble into a submatrix.  `run_cases` checks
every case and reports pass/fail per case; the CLI `verify` subcommand is
a thin wrapper over it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .matrix import BicomplexMatrix, ComplexMatrix, contains_submatrix
from .rank import chain_rank, rank_report
from .scalar import Bicomplex, E1, E2, I1I2


@dataclass(frozen=True)
class VerifyCase:
    case_id: str
    description: str
    run: Callable[[], tuple[bool, str]]


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    description: str
    ok: bool
    detail: str


def _check(pairs: list[tuple[str, object, object]]) -> tuple[bool, str]:
    bad = [f"{name}: expected {want}, got {got}" for name, want, got in pairs if got != want]
    if bad:
        return False, "; ".join(bad)
    return True, "; ".join(f"{name}={want}" for name, want, _ in pairs)


def _swap_idempotent() -> tuple[bool, str]:
    a = BicomplexMatrix.from_rows([[E1, E2], [E2, E1]])
    r, cert = chain_rank(a)
    det = a.det()
    return _check(
        [
            ("chain_rank", 0, r),
            ("certificate", None, cert),
            ("det", I1I2, det),
            ("det_singular", False, det.is_singular()),
        ]
    )


def _rect_4x3() -> tuple[bool, str]:
    a = BicomplexMatrix.from_rows(
        [[1, 0, 1], [E2, E1, 0], [0, E2, E1], [0, 0, E1]]
    )
    rep = rank_report(a)
    return _check(
        [
            ("chain_rank", 1, rep.chain_rank),
            ("row_rank", 4, rep.row_rank),
            ("col_rank", 3, rep.col_rank),
        ]
    )


def _component_rank_collapse() -> tuple[bool, str]:
    a = BicomplexMatrix.from_rows([[E1, E2, 0], [E2, E1, 6]])
    rep = rank_report(a)
    return _check(
        [
            ("rank_1A", 2, rep.rank_1a),
            ("rank_2A", 2, rep.rank_2a),
            ("chain_rank", 1, rep.chain_rank),
        ]
    )


def _row_col_rank_differ() -> tuple[bool, str]:
    a = BicomplexMatrix.from_rows([[2, E1, 1], [0, 0, E1]])
    rep = rank_report(a)
    return _check([("row_rank", 2, rep.row_rank), ("col_rank", 3, rep.col_rank)])


def _independent_rows_singular_det() -> tuple[bool, str]:
    a = BicomplexMatrix.from_rows([[1, 2], [E1, 0]])
    rep = rank_report(a)
    return _check(
        [
            ("row_rank", 2, rep.row_rank),
            ("col_rank", 2, rep.col_rank),
            ("det", Bicomplex.from_idempotent(-2, 0), rep.det),
            ("det_singular", True, rep.det_singular),
        ]
    )


def _dependent_components_full_row_rank() -> tuple[bool, str]:
    a = BicomplexMatrix.from_rows([[0, 0, E1], [0, 0, E2]])
    rep = rank_report(a)
    return _check(
        [
            ("row_rank", 2, rep.row_rank),
            ("rank_1A", 1, rep.rank_1a),
            ("rank_2A", 1, rep.rank_2a),
        ]
    )


def _dependent_components_full_col_rank() -> tuple[bool, str]:
    a = BicomplexMatrix.from_rows([[E1, 0], [0, E2]])
    rep = rank_report(a)
    return _check(
        [
            ("col_rank", 2, rep.col_rank),
            ("rank_1A", 1, rep.rank_1a),
            ("rank_2A", 1, rep.rank_2a),
        ]
    )


def _components_dont_assemble() -> tuple[bool, str]:
    a = BicomplexMatrix.from_rows([[1, E1, 0], [E1, E2, E1], [0, 0, 1]])
    a1, a2 = a.idempotent_split()
    b1 = ComplexMatrix.from_rows([[1, 1], [0, 0]])
    b2 = ComplexMatrix.from_rows([[1, 0], [0, 1]])
    b = BicomplexMatrix.from_components(b1, b2)
    expected_b = BicomplexMatrix.from_rows([[1, E1], [0, E2]])
    return _check(
        [
            ("assembled", expected_b, b),
            ("1_B inside 1_A", True, contains_submatrix(a1, b1)),
            ("2_B inside 2_A", True, contains_submatrix(a2, b2)),
            ("B inside A", False, contains_submatrix(a, b)),
        ]
    )


BUILTIN_CASES: tuple[VerifyCase, ...] = (
    VerifyCase(
        "chain-rank-zero-invertible-det",
        "2x2 idempotent swap matrix: chain rank 0 yet determinant invertible",
        _swap_idempotent,
    ),
    VerifyCase(
        "three-ranks-pairwise-differ",
        "4x3 matrix with chain rank 1, row rank 4, column rank 3",
        _rect_4x3,
    ),
    VerifyCase(
        "full-component-ranks-chain-collapses",
        "2x3 matrix with both component ranks 2 but chain rank 1",
        _component_rank_collapse,
    ),
    VerifyCase(
        "row-rank-differs-from-col-rank",
        "2x3 matrix with independent rows and independent columns",
        _row_col_rank_differ,
    ),
    VerifyCase(
        "independent-rows-but-singular-det",
        "2x2 matrix with row and column rank 2 and zero-divisor determinant",
        _independent_rows_singular_det,
    ),
    VerifyCase(
        "row-rank-exceeds-component-ranks",
        "independent rows although both component matrices have dependent rows",
        _dependent_components_full_row_rank,
    ),
    VerifyCase(
        "col-rank-exceeds-component-ranks",
        "independent columns although both component matrices have dependent columns",
        _dependent_components_full_col_rank,
    ),
    VerifyCase(
        "component-submatrices-dont-assemble",
        "submatrices of both components that assemble to a non-submatrix",
        _components_dont_assemble,
    ),
)


def run_cases(cases: tuple[VerifyCase, ...] = BUILTIN_CASES) -> list[CaseResult]:
    results = []
    for case in cases:
        ok, detail = case.run()
        results.append(CaseResult(case.case_id, case.description, ok, detail))
    return results
