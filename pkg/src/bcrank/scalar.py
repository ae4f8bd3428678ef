"""Exact bicomplex scalars.

A bicomplex number is ``z1 + i2*z2`` with ``z1, z2`` complex and a second
imaginary unit ``i2`` that commutes with the usual ``i1`` (``i1**2 = i2**2
= -1``).  The ring contains the two idempotents ``e1 = (1 + i1*i2)/2`` and
``e2 = (1 - i1*i2)/2`` which are zero divisors (``e1*e2 = 0``) and split
every element uniquely as ``x = p1*e1 + p2*e2`` with complex parts
``p1 = z1 - i1*z2`` and ``p2 = z1 + i1*z2``.  Multiplication acts
componentwise on the parts, so an element is invertible exactly when both
parts are nonzero.

All coefficients are Gaussian rationals (exact ``Fraction`` pairs): the
singularity tests downstream are equality tests against zero divisors and
would be meaningless in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import NotInvertible

RationalLike = int | Fraction


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: object) -> "GaussianRational":
        other = as_gaussian(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GaussianRational":
        other = as_gaussian(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: object) -> "GaussianRational":
        other = as_gaussian(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: object) -> "GaussianRational":
        other = as_gaussian(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "GaussianRational":
        other = as_gaussian(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero Gaussian rational")
        norm = other.re * other.re + other.im * other.im
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other: object) -> "GaussianRational":
        other = as_gaussian(other)
        if other is None:
            return NotImplemented
        return other / self

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


def as_gaussian(value: object) -> GaussianRational | None:
    """Coerce ints and Fractions into GaussianRational; None if impossible."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return None


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


class SingularityClass(Enum):
    """Where a bicomplex number sits relative to the zero-divisor lines."""

    ZERO = "zero"
    E1_LINE = "e1_line"  # nonzero multiple of e1
    E2_LINE = "e2_line"  # nonzero multiple of e2
    INVERTIBLE = "invertible"


@dataclass(frozen=True, slots=True)
class Bicomplex:
    """A bicomplex number stored as the pair (z1, z2) of Gaussian rationals.

    The pair form is the single source of truth; idempotent parts are
    derived on demand and `from_idempotent` inverts them exactly.
    """

    z1: GaussianRational
    z2: GaussianRational

    def __init__(self, z1: object = 0, z2: object = 0):
        g1 = as_gaussian(z1)
        g2 = as_gaussian(z2)
        if g1 is None or g2 is None:
            raise TypeError("Bicomplex components must be Gaussian rationals")
        object.__setattr__(self, "z1", g1)
        object.__setattr__(self, "z2", g2)

    # -- construction ---------------------------------------------------

    @classmethod
    def from_reals(
        cls,
        u1: RationalLike = 0,
        u2: RationalLike = 0,
        u3: RationalLike = 0,
        u4: RationalLike = 0,
    ) -> "Bicomplex":
        """Build u1 + u2*i1 + u3*i2 + u4*i1i2."""
        return cls(GaussianRational(u1, u2), GaussianRational(u3, u4))

    @classmethod
    def from_complex(cls, c: GaussianRational | RationalLike) -> "Bicomplex":
        """Embed an ordinary complex number (z2 = 0)."""
        return cls(c, 0)

    @classmethod
    def from_idempotent(
        cls, c1: GaussianRational | RationalLike, c2: GaussianRational | RationalLike
    ) -> "Bicomplex":
        """Build the number whose idempotent parts are (c1, c2)."""
        p1 = as_gaussian(c1)
        p2 = as_gaussian(c2)
        if p1 is None or p2 is None:
            raise TypeError("idempotent parts must be Gaussian rationals")
        half = Fraction(1, 2)
        z1 = (p1 + p2) * half
        z2 = GR_I * (p1 - p2) * half
        return cls(z1, z2)

    # -- structure ------------------------------------------------------

    def idempotent_parts(self) -> tuple[GaussianRational, GaussianRational]:
        """Return (p1, p2) with self = p1*e1 + p2*e2."""
        return (self.z1 - GR_I * self.z2, self.z1 + GR_I * self.z2)

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """The four real coefficients (u1, u2, u3, u4)."""
        return (self.z1.re, self.z1.im, self.z2.re, self.z2.im)

    def singularity_class(self) -> SingularityClass:
        p1, p2 = self.idempotent_parts()
        if p1.is_zero():
            return SingularityClass.ZERO if p2.is_zero() else SingularityClass.E2_LINE
        if p2.is_zero():
            return SingularityClass.E1_LINE
        return SingularityClass.INVERTIBLE

    def is_zero(self) -> bool:
        return self.z1.is_zero() and self.z2.is_zero()

    def is_singular(self) -> bool:
        """True when the number has no inverse (some idempotent part is 0)."""
        return self.singularity_class() is not SingularityClass.INVERTIBLE

    def in_ideal_e1(self) -> bool:
        """Membership in the principal ideal generated by e1 (includes 0)."""
        _, p2 = self.idempotent_parts()
        return p2.is_zero()

    def in_ideal_e2(self) -> bool:
        """Membership in the principal ideal generated by e2 (includes 0)."""
        p1, _ = self.idempotent_parts()
        return p1.is_zero()

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: object) -> "Bicomplex":
        other = as_bicomplex(other)
        if other is None:
            return NotImplemented
        return Bicomplex(self.z1 + other.z1, self.z2 + other.z2)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Bicomplex":
        other = as_bicomplex(other)
        if other is None:
            return NotImplemented
        return Bicomplex(self.z1 - other.z1, self.z2 - other.z2)

    def __rsub__(self, other: object) -> "Bicomplex":
        other = as_bicomplex(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "Bicomplex":
        return Bicomplex(-self.z1, -self.z2)

    def __mul__(self, other: object) -> "Bicomplex":
        # (z1 + j z2)(w1 + j w2) = (z1 w1 - z2 w2) + j (z1 w2 + z2 w1)
        other = as_bicomplex(other)
        if other is None:
            return NotImplemented
        return Bicomplex(
            self.z1 * other.z1 - self.z2 * other.z2,
            self.z1 * other.z2 + self.z2 * other.z1,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Bicomplex":
        """Multiplicative inverse, via reciprocal idempotent parts."""
        p1, p2 = self.idempotent_parts()
        if p1.is_zero() or p2.is_zero():
            raise NotInvertible(f"{self} is singular and has no inverse")
        return Bicomplex.from_idempotent(GR_ONE / p1, GR_ONE / p2)

    # -- formatting -----------------------------------------------------

    def format_literal(self) -> str:
        """Canonical literal: u1+u2i1+u3i2+u4i1i2 with zero terms omitted.

        Coefficients are emitted explicitly (also for +-1) so the output
        re-parses under the entry grammar and round-trips exactly.
        """
        pieces: list[str] = []
        for coeff, unit in zip(self.coefficients(), ("", "i1", "i2", "i1i2")):
            if coeff == 0:
                continue
            if not pieces:
                pieces.append(f"{coeff}{unit}")
            else:
                sign = "+" if coeff > 0 else "-"
                pieces.append(f"{sign}{abs(coeff)}{unit}")
        return "".join(pieces) if pieces else "0"

    def __str__(self) -> str:
        return self.format_literal()

    def __repr__(self) -> str:
        return f"Bicomplex({self.z1!r}, {self.z2!r})"


def as_bicomplex(value: object) -> Bicomplex | None:
    """Coerce scalars (int, Fraction, GaussianRational) into Bicomplex."""
    if isinstance(value, Bicomplex):
        return value
    if isinstance(value, (int, Fraction, GaussianRational)):
        return Bicomplex(value, 0)
    return None


ZERO = Bicomplex(0, 0)
ONE = Bicomplex(1, 0)
I1 = Bicomplex(GaussianRational(0, 1), 0)
I2 = Bicomplex(0, 1)
I1I2 = Bicomplex(0, GaussianRational(0, 1))
E1 = Bicomplex.from_idempotent(1, 0)
E2 = Bicomplex.from_idempotent(0, 1)
