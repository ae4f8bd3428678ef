"""Exact rank theory for bicomplex matrices.

Bicomplex numbers carry two idempotent zero divisors, so "non-singular"
is not hereditary and a single matrix supports four genuinely different
rank notions: the chain rank (nested towers of non-singular square
submatrices), the row and column ranks over complex scalars, and the
idempotent rank built from the two component matrices.  Everything here
is computed in exact Gaussian-rational arithmetic.
"""

from .errors import (
    BCRankError,
    DimensionMismatch,
    GuardExceeded,
    IndexOutOfRange,
    NotInvertible,
    NotSquare,
    OrderTooLarge,
    ParseError,
    RejectionLimitExceeded,
    ShapeMismatch,
)
from .matrix import (
    BicomplexMatrix,
    ComplexMatrix,
    MatrixClass,
    contains_submatrix,
)
from .oracle import (
    GenParams,
    SplitMix64,
    chain_rank_reference,
    det_reference,
    random_bicomplex,
    random_invertible_entry_matrix,
    random_matrix,
    row_rank_reference,
)
from .parsing import MatrixDocument, parse_entry, parse_matrix, serialize_matrix
from .rank import (
    ChainCertificate,
    RankReport,
    chain_rank,
    col_rank,
    complex_rank,
    idem_col_rank,
    idem_row_rank,
    rank_report,
    row_rank,
    validate_certificate,
)
from .scalar import (
    Bicomplex,
    E1,
    E2,
    GaussianRational,
    I1,
    I1I2,
    I2,
    ONE,
    SingularityClass,
    ZERO,
)
from .spaces import (
    BicomplexSpan,
    ComplexSubspace,
    direct_sum_dim,
    idem_col_space_basis,
    idem_row_space_basis,
    intersection_is_trivial,
    lift,
    membership,
    span_rank,
)

__version__ = "0.1.0"

__all__ = [
    "BCRankError",
    "Bicomplex",
    "BicomplexMatrix",
    "BicomplexSpan",
    "ChainCertificate",
    "ComplexMatrix",
    "ComplexSubspace",
    "DimensionMismatch",
    "E1",
    "E2",
    "GaussianRational",
    "GenParams",
    "GuardExceeded",
    "I1",
    "I1I2",
    "I2",
    "IndexOutOfRange",
    "MatrixClass",
    "MatrixDocument",
    "NotInvertible",
    "NotSquare",
    "ONE",
    "OrderTooLarge",
    "ParseError",
    "RankReport",
    "RejectionLimitExceeded",
    "ShapeMismatch",
    "SingularityClass",
    "SplitMix64",
    "ZERO",
    "chain_rank",
    "chain_rank_reference",
    "col_rank",
    "complex_rank",
    "contains_submatrix",
    "det_reference",
    "direct_sum_dim",
    "idem_col_rank",
    "idem_col_space_basis",
    "idem_row_rank",
    "idem_row_space_basis",
    "intersection_is_trivial",
    "lift",
    "membership",
    "parse_entry",
    "parse_matrix",
    "random_bicomplex",
    "random_invertible_entry_matrix",
    "random_matrix",
    "rank_report",
    "row_rank",
    "row_rank_reference",
    "serialize_matrix",
    "span_rank",
    "validate_certificate",
]
