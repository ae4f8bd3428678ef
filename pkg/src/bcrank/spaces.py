"""Idempotent row/column spaces and subspace lifts.

A complex subspace V of C^n lifts to the bicomplex space V*e1 (or V*e2)
by multiplying every basis vector entrywise with the idempotent.  The two
lifts meet only in 0, so the idempotent row space of a matrix, built from
the row spaces of the two component matrices, has dimension equal to the
sum of the component ranks.

Scalars are always ordinary complex numbers; spans never use bicomplex
coefficients.  Membership questions are solved exactly on the flattening
that concatenates the two idempotent parts of each vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

from . import elimination
from .errors import DimensionMismatch
from .matrix import BicomplexMatrix, ComplexMatrix
from .scalar import Bicomplex, GaussianRational, as_gaussian

ComplexVector = tuple[GaussianRational, ...]
BicomplexVector = tuple[Bicomplex, ...]


@dataclass(frozen=True, slots=True)
class ComplexSubspace:
    """A subspace of C^n held as its reduced row-echelon basis.

    The canonical basis makes equality of subspaces an equality of
    dataclass fields.
    """

    ambient_dim: int
    basis: tuple[ComplexVector, ...]

    @classmethod
    def from_vectors(
        cls, ambient_dim: int, vectors: Iterable[Sequence[object]]
    ) -> "ComplexSubspace":
        rows = []
        for vec in vectors:
            coerced = [as_gaussian(x) for x in vec]
            if any(x is None for x in coerced):
                raise TypeError("subspace vectors must be complex scalars")
            if len(coerced) != ambient_dim:
                raise DimensionMismatch(
                    f"vector of length {len(coerced)} in ambient dimension {ambient_dim}"
                )
            rows.append(coerced)
        reduced, _ = elimination.rref(rows)
        return cls(ambient_dim, tuple(tuple(row) for row in reduced))

    @classmethod
    def zero(cls, ambient_dim: int) -> "ComplexSubspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "ComplexSubspace":
        return cls.from_vectors(
            ambient_dim,
            [[1 if i == j else 0 for j in range(ambient_dim)] for i in range(ambient_dim)],
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence[object]) -> bool:
        coerced = [as_gaussian(x) for x in vector]
        if len(coerced) != self.ambient_dim or any(x is None for x in coerced):
            raise DimensionMismatch("vector does not match the ambient dimension")
        return elimination.solve_in_span(list(self.basis), coerced) is not None


@dataclass(frozen=True, slots=True)
class BicomplexSpan:
    """A list of bicomplex generating vectors, spanned with complex scalars."""

    ambient_dim: int
    generators: tuple[BicomplexVector, ...]
    scalar_field: str = field(default="C1")


def row_space(m: ComplexMatrix) -> ComplexSubspace:
    return ComplexSubspace.from_vectors(m.cols, [m.row(i) for i in range(m.rows)])


def col_space(m: ComplexMatrix) -> ComplexSubspace:
    return ComplexSubspace.from_vectors(m.rows, [m.col(j) for j in range(m.cols)])


def lift(v: ComplexSubspace, which: Literal["e1", "e2"]) -> BicomplexSpan:
    """Multiply the basis of `v` entrywise by e1 or e2.

    The lifted generators stay independent, so the span's dimension equals
    dim(v).
    """
    if which == "e1":
        generators = tuple(
            tuple(Bicomplex.from_idempotent(x, 0) for x in vec) for vec in v.basis
        )
    elif which == "e2":
        generators = tuple(
            tuple(Bicomplex.from_idempotent(0, x) for x in vec) for vec in v.basis
        )
    else:
        raise ValueError("which must be 'e1' or 'e2'")
    return BicomplexSpan(v.ambient_dim, generators)


def idem_row_space_basis(a: BicomplexMatrix) -> BicomplexSpan:
    """Generators of (row space of 1_A)*e1 + (row space of 2_A)*e2."""
    m1, m2 = a.idempotent_split()
    gens = lift(row_space(m1), "e1").generators + lift(row_space(m2), "e2").generators
    return BicomplexSpan(a.cols, gens)


def idem_col_space_basis(a: BicomplexMatrix) -> BicomplexSpan:
    """Column-space analogue of `idem_row_space_basis`."""
    m1, m2 = a.idempotent_split()
    gens = lift(col_space(m1), "e1").generators + lift(col_space(m2), "e2").generators
    return BicomplexSpan(a.rows, gens)


def flatten_vector(vec: Sequence[Bicomplex]) -> list[GaussianRational]:
    """Concatenate the first and second idempotent parts of each entry."""
    parts = [x.idempotent_parts() for x in vec]
    return [p[0] for p in parts] + [p[1] for p in parts]


def span_rank(span: BicomplexSpan) -> int:
    """Dimension (over complex scalars) of the spanned space."""
    if not span.generators:
        return 0
    return elimination.rank([flatten_vector(g) for g in span.generators])


def membership(
    vector: Sequence[Bicomplex], span: BicomplexSpan
) -> list[GaussianRational] | None:
    """Coefficients writing `vector` as a complex combination of the
    generators, or None when the vector lies outside the span."""
    if len(vector) != span.ambient_dim:
        raise DimensionMismatch(
            f"vector of length {len(vector)} against ambient {span.ambient_dim}"
        )
    flat_gens = [flatten_vector(g) for g in span.generators]
    return elimination.solve_in_span(flat_gens, flatten_vector(vector))


def evaluate_combination(
    coeffs: Sequence[GaussianRational], span: BicomplexSpan
) -> BicomplexVector:
    """Sum coeffs[i] * generators[i]; used to recheck membership answers."""
    if len(coeffs) != len(span.generators):
        raise DimensionMismatch("one coefficient per generator required")
    total = [Bicomplex(0, 0)] * span.ambient_dim
    for alpha, gen in zip(coeffs, span.generators):
        scale = Bicomplex.from_complex(alpha)
        total = [acc + scale * x for acc, x in zip(total, gen)]
    return tuple(total)


def _combined_lift_flat(
    v1: ComplexSubspace, v2: ComplexSubspace
) -> list[list[GaussianRational]]:
    if v1.ambient_dim != v2.ambient_dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {v1.ambient_dim} vs {v2.ambient_dim}"
        )
    gens = lift(v1, "e1").generators + lift(v2, "e2").generators
    return [flatten_vector(g) for g in gens]


def intersection_is_trivial(v1: ComplexSubspace, v2: ComplexSubspace) -> bool:
    """Whether (v1*e1) meets (v2*e2) only in 0.

    Computed, not assumed: the concatenated lifted generators must be
    independent, which fails exactly when the intersection is nontrivial.
    """
    flat = _combined_lift_flat(v1, v2)
    if not flat:
        return True
    return elimination.rank(flat) == v1.dim + v2.dim


def direct_sum_dim(v1: ComplexSubspace, v2: ComplexSubspace) -> int:
    """Dimension of v1*e1 + v2*e2 (= dim v1 + dim v2, computed directly)."""
    flat = _combined_lift_flat(v1, v2)
    if not flat:
        return 0
    return elimination.rank(flat)
