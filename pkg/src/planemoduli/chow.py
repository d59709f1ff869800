"""Truncated Chow rings for the plane and for (parameter curve) x plane.

Classes on the plane live on the basis {1, h, h^2} with h the line class
and h^3 = 0.  Classes on the product of a parameter curve with the plane
live on the basis {1, h, h^2, p, p h, p h^2} where p is the point class of
the curve, so p^2 = 0.  Writing a product class as A + p*B with A, B plane
classes makes the multiplication rule one line.

All coefficients are exact rationals.  The degree extraction used by every
Riemann-Roch computation downstream is simply the coefficient of p h^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exactmath import Scalar


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class ChowP2:
    """A class c0 + c1*h + c2*h^2 on the plane, truncated at h^3 = 0."""

    c0: Fraction
    c1: Fraction
    c2: Fraction

    def __init__(self, c0: Scalar = 0, c1: Scalar = 0, c2: Scalar = 0):
        object.__setattr__(self, "c0", _frac(c0))
        object.__setattr__(self, "c1", _frac(c1))
        object.__setattr__(self, "c2", _frac(c2))

    def __add__(self, other: "ChowP2") -> "ChowP2":
        return ChowP2(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: "ChowP2") -> "ChowP2":
        return ChowP2(self.c0 - other.c0, self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> "ChowP2":
        return ChowP2(-self.c0, -self.c1, -self.c2)

    def __mul__(self, other: "ChowP2 | int | Fraction") -> "ChowP2":
        if isinstance(other, (int, Fraction)):
            s = _frac(other)
            return ChowP2(self.c0 * s, self.c1 * s, self.c2 * s)
        return ChowP2(
            self.c0 * other.c0,
            self.c0 * other.c1 + self.c1 * other.c0,
            self.c0 * other.c2 + self.c1 * other.c1 + self.c2 * other.c0,
        )

    __rmul__ = __mul__

    def lift(self) -> "ChowCurveP2":
        """Pull back to the product (no p component)."""
        return ChowCurveP2(self.c0, self.c1, self.c2, 0, 0, 0)


@dataclass(frozen=True)
class ChowCurveP2:
    """A class on (parameter curve) x plane on the basis {1, h, h^2, p, ph, ph^2}."""

    a1: Fraction
    ah: Fraction
    ah2: Fraction
    ap: Fraction
    aph: Fraction
    aph2: Fraction

    def __init__(self, a1: Scalar = 0, ah: Scalar = 0, ah2: Scalar = 0,
                 ap: Scalar = 0, aph: Scalar = 0, aph2: Scalar = 0):
        for name, value in (("a1", a1), ("ah", ah), ("ah2", ah2),
                            ("ap", ap), ("aph", aph), ("aph2", aph2)):
            object.__setattr__(self, name, _frac(value))

    @classmethod
    def from_parts(cls, plane: ChowP2, p_part: ChowP2) -> "ChowCurveP2":
        return cls(plane.c0, plane.c1, plane.c2, p_part.c0, p_part.c1, p_part.c2)

    def plane_part(self) -> ChowP2:
        return ChowP2(self.a1, self.ah, self.ah2)

    def p_part(self) -> ChowP2:
        return ChowP2(self.ap, self.aph, self.aph2)

    def is_p_free(self) -> bool:
        return self.ap == 0 and self.aph == 0 and self.aph2 == 0

    def __add__(self, other: "ChowCurveP2") -> "ChowCurveP2":
        return ChowCurveP2(self.a1 + other.a1, self.ah + other.ah,
                           self.ah2 + other.ah2, self.ap + other.ap,
                           self.aph + other.aph, self.aph2 + other.aph2)

    def __sub__(self, other: "ChowCurveP2") -> "ChowCurveP2":
        return self + (-other)

    def __neg__(self) -> "ChowCurveP2":
        return ChowCurveP2(-self.a1, -self.ah, -self.ah2,
                           -self.ap, -self.aph, -self.aph2)

    def __mul__(self, other: "ChowCurveP2 | int | Fraction") -> "ChowCurveP2":
        if isinstance(other, (int, Fraction)):
            s = _frac(other)
            return ChowCurveP2(self.a1 * s, self.ah * s, self.ah2 * s,
                               self.ap * s, self.aph * s, self.aph2 * s)
        # (A + pB)(A' + pB') = AA' + p(AB' + BA') since p^2 = 0
        a, b = self.plane_part(), self.p_part()
        a2, b2 = other.plane_part(), other.p_part()
        return ChowCurveP2.from_parts(a * a2, a * b2 + b * a2)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return (f"{self.a1} + {self.ah} h + {self.ah2} h^2 + "
                f"{self.ap} p + {self.aph} p h + {self.aph2} p h^2")


#: basis-element tags accepted by coeff()
MONOMIALS = ("1", "h", "h2", "p", "ph", "ph2")

_FIELD_BY_TAG = {"1": "a1", "h": "ah", "h2": "ah2",
                 "p": "ap", "ph": "aph", "ph2": "aph2"}


def mul(x: ChowCurveP2, y: ChowCurveP2) -> ChowCurveP2:
    """Graded product with the truncations p^2 = 0 and h^3 = 0."""
    return x * y


def exp_class(alpha: Scalar, beta: Scalar) -> ChowCurveP2:
    """exp(alpha*p + beta*h), truncated.

    Equals (1 + alpha p) (1 + beta h + beta^2/2 h^2) because p squares to
    zero and h^3 vanishes.
    """
    a, b = _frac(alpha), _frac(beta)
    half_b2 = b * b / 2
    return ChowCurveP2(1, b, half_b2, a, a * b, a * half_b2)


def todd_relative() -> ChowCurveP2:
    """Todd class of the plane direction: 1 + 3/2 h + h^2."""
    return ChowCurveP2(1, Fraction(3, 2), 1, 0, 0, 0)


def coeff(x: ChowCurveP2, monomial: str) -> Fraction:
    """The coefficient of the given basis element of {1, h, h2, p, ph, ph2}."""
    try:
        field = _FIELD_BY_TAG[monomial]
    except KeyError:
        raise DomainError(f"unknown Chow monomial tag {monomial!r}; "
                          f"expected one of {', '.join(MONOMIALS)}") from None
    return getattr(x, field)
