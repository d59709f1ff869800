"""Determinant-line-bundle calculus on the moduli space of plane sheaves.

The Picard group of the degree-d moduli space is written in the geometric
basis {A, L}: A is the divisor of sheaves whose support meets a fixed
point, L the divisor of relative point configurations meeting a fixed
line.  The K-theoretic generators are the point class (mapping to A) and
the theta-like class (-d, 1, -1/2) (mapping to D = (1-d) A + L); a class
orthogonal to the moduli class decomposes over them, which is how every
wall divisor below is computed.

Intersection numbers of divisors with the four test families of sheaves
(a pencil, a Jacobian family, and one family on the first wall for each
parity) are computed by pushing the family's Chern character times the
relative Todd class times the pulled-back K-class to the coefficient of
p h^2, which is the Riemann-Roch degree of the determinant line bundle
on the parameter curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import chow, ktheory
from .chow import ChowCurveP2
from .errors import ConventionError, DomainError
from .exactmath import Scalar
from .ktheory import ChernP2


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class DivisorAL:
    """A divisor class a*A + l*L on the moduli space."""

    a: Fraction
    l: Fraction

    def __init__(self, a: Scalar, l: Scalar):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "l", _frac(l))

    def __add__(self, other: "DivisorAL") -> "DivisorAL":
        return DivisorAL(self.a + other.a, self.l + other.l)

    def __sub__(self, other: "DivisorAL") -> "DivisorAL":
        return DivisorAL(self.a - other.a, self.l - other.l)

    def __mul__(self, s: Scalar) -> "DivisorAL":
        return DivisorAL(self.a * _frac(s), self.l * _frac(s))

    __rmul__ = __mul__

    def __str__(self) -> str:
        parts: list[str] = []
        for coef, name in ((self.a, "A"), (self.l, "L")):
            if coef == 0:
                continue
            mag = abs(coef)
            body = name if mag == 1 else f"{mag}{name}"
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def to_json(self) -> dict[str, str]:
        return {"a": str(self.a), "l": str(self.l)}


A_DIVISOR = DivisorAL(1, 0)
L_DIVISOR = DivisorAL(0, 1)

#: family kinds accepted by family_class()
FAMILY_KINDS = ("pencil", "jacobian", "even_wall", "odd_wall")


@dataclass(frozen=True)
class FamilyClass:
    """The Chern character of a one-parameter family of sheaves."""

    chern: ChowCurveP2
    label: str
    degree_d: int


def genus(d: int) -> int:
    """Arithmetic genus (d-1)(d-2)/2 of a smooth plane curve of degree d."""
    if d < 1:
        raise DomainError("degree must be at least 1")
    return (d - 1) * (d - 2) // 2


def a_class() -> ChernP2:
    """The K-class mapping to the divisor A: a point sheaf."""
    return ktheory.point()


def d_class(d: int) -> ChernP2:
    """The K-class mapping to the theta-like divisor D: (-d, 1, -1/2)."""
    return ChernP2(-d, 1, Fraction(-1, 2))


def first_wall_destabilizer(d: int) -> ChernP2:
    """Chern character of the destabilizing object at the outermost wall.

    Ideal sheaf of (d-2)/2 points twisted by (d-2)/2 for even d, the line
    bundle O((d-3)/2) for odd d.
    """
    if d < 3:
        raise DomainError("first wall is defined for degree >= 3")
    if d % 2 == 0:
        n = (d - 2) // 2
        return ktheory.ideal_twisted(n, n)
    return ktheory.line_bundle((d - 3) // 2)


def orthogonal_wall_class(v: ChernP2, vprime: ChernP2) -> ChernP2:
    """The class w with euler_product(w, v) = euler_product(w, vprime) = 0, c-part 1.

    For w = (r, 1, e) each orthogonality condition is linear in (r, e):
    r*(e_u + 3 c_u/2 + r_u) + e*r_u = -(c_u + 3 r_u/2).  Solving the 2x2
    system and normalizing c = 1 makes the L-coefficient of the resulting
    divisor equal to 1.
    """
    rows = []
    for u in (v, vprime):
        rows.append((u.e + Fraction(3 * u.c, 2) + u.r,
                     Fraction(u.r),
                     -(u.c + Fraction(3 * u.r, 2))))
    (m00, m01, b0), (m10, m11, b1) = rows
    det = m00 * m11 - m01 * m10
    if det == 0:
        raise DomainError("orthogonality system is rank deficient "
                          "(proportional input classes)")
    r_w = (b0 * m11 - b1 * m01) / det
    e_w = (m00 * b1 - m10 * b0) / det
    if r_w.denominator != 1:
        raise DomainError(f"orthogonal class has non-integer rank {r_w}")
    return ChernP2(int(r_w), 1, e_w)


def lambda_decompose(w: ChernP2, d: int) -> DivisorAL:
    """Write the determinant divisor of w in the {A, L} basis.

    Requires w orthogonal to the moduli class; then w = alpha*(point) +
    beta*(theta class) and the divisor is (alpha + beta (1-d)) A + beta L.
    """
    v = ktheory.moduli(d)
    if ktheory.euler_product(w, v) != 0:
        raise DomainError("class is not orthogonal to the moduli class; "
                          "its determinant divisor is not defined")
    beta = Fraction(w.c)
    alpha = w.e + beta / 2
    if w.r != -d * beta:
        raise ConventionError("orthogonal class fails the rank relation r = -d*c")
    return DivisorAL(alpha + beta * (1 - d), beta)


def wall_divisor(d: int, vprime: ChernP2) -> DivisorAL:
    """Divisor attached to the wall where vprime destabilizes the moduli class."""
    return lambda_decompose(orthogonal_wall_class(ktheory.moduli(d), vprime), d)


def nef_generators(d: int) -> tuple[DivisorAL, DivisorAL]:
    """Generators (A, B) of the two extremal rays of the nef cone.

    B is computed from the first wall and must agree with the closed form
    (d-2)^2 (d+2)/8 A + L for even d and (d-1)(d+4)(d-3)/8 A + L for odd.
    """
    if d < 3:
        raise DomainError("nef cone generators need degree >= 3")
    b = wall_divisor(d, first_wall_destabilizer(d))
    if d % 2 == 0:
        expected = Fraction((d - 2) ** 2 * (d + 2), 8)
    else:
        expected = Fraction((d - 1) * (d + 4) * (d - 3), 8)
    if b != DivisorAL(expected, 1):
        raise ConventionError(
            f"first-wall divisor {b} disagrees with the closed form "
            f"{DivisorAL(expected, 1)} at degree {d}")
    return A_DIVISOR, b


def effective_generators(d: int) -> tuple[DivisorAL, DivisorAL]:
    """Generators (A, L) of the extremal rays of the effective cone."""
    if d < 3:
        raise DomainError("effective cone generators need degree >= 3")
    return A_DIVISOR, L_DIVISOR


def pullback(w: ChernP2) -> ChowCurveP2:
    """Pull a plane K-class back to the product: r + c h + e h^2, no p part."""
    return ChowCurveP2(w.r, w.c, w.e, 0, 0, 0)


def family_class(kind: str, d: int) -> FamilyClass:
    """Chern character of one of the four test families of degree-d sheaves.

    pencil    -- sheaves along a pencil of degree-d curves with fixed base
                 points: exp(p) - exp(-d h) + g h^2.
    jacobian  -- line bundles along a fixed smooth curve, one moving point:
                 d h + d p h + (g - d^2/2) h^2 + (1 - g - 3d/2) p h^2.
    even_wall -- the universal first-wall family (d even):
                 exp((d-2)/2 h) - exp(-p - (d+2)/2 h) - (d-2)/2 h^2.
    odd_wall  -- the universal first-wall family (d odd):
                 exp(p + (d-3)/2 h) - exp(-(d+3)/2 h) + h^2.

    The subscheme and skyscraper corrections in the wall families carry no
    p component, so they never contribute to an intersection degree.
    """
    if d < 1:
        raise DomainError("degree must be at least 1")
    g = genus(d)
    if kind == "pencil":
        cls = (chow.exp_class(1, 0) - chow.exp_class(0, -d)
               + ChowCurveP2(0, 0, g, 0, 0, 0))
    elif kind == "jacobian":
        cls = ChowCurveP2(0, d, g - Fraction(d * d, 2),
                          0, d, 1 - g - Fraction(3 * d, 2))
    elif kind == "even_wall":
        if d % 2 != 0:
            raise DomainError("even_wall family needs an even degree")
        cls = (chow.exp_class(0, Fraction(d - 2, 2))
               - chow.exp_class(-1, Fraction(-(d + 2), 2))
               - ChowCurveP2(0, 0, Fraction(d - 2, 2), 0, 0, 0))
    elif kind == "odd_wall":
        if d % 2 != 1:
            raise DomainError("odd_wall family needs an odd degree")
        cls = (chow.exp_class(1, Fraction(d - 3, 2))
               - chow.exp_class(0, Fraction(-(d + 3), 2))
               + ChowCurveP2(0, 0, 1, 0, 0, 0))
    else:
        raise DomainError(f"unknown family kind {kind!r}; "
                          f"expected one of {', '.join(FAMILY_KINDS)}")
    return FamilyClass(chern=cls, label=kind, degree_d=d)


def intersection_degree(fam: FamilyClass, w: ChernP2) -> Fraction:
    """Degree of the determinant line bundle of w on the family's base curve.

    Riemann-Roch: the coefficient of p h^2 in ch(family) * Td * ch(w).
    """
    total = fam.chern * chow.todd_relative() * pullback(w)
    return chow.coeff(total, "ph2")


def d_in_AL(d: int) -> DivisorAL:
    """Express the theta-like divisor D in the {A, L} basis via test curves.

    Solves a (A.P) + l (L.P) = D.P and a (A.T) + l (L.T) = D.T with the
    pencil constants A.P = 1, L.P = 0, the Jacobian constants A.T = 0,
    L.T = d*g, and both right-hand sides computed by Riemann-Roch.
    """
    if d < 3:
        raise DomainError("basis conversion needs degree >= 3")
    w = d_class(d)
    d_dot_p = intersection_degree(family_class("pencil", d), w)
    d_dot_t = intersection_degree(family_class("jacobian", d), w)
    l_dot_t = Fraction(d * genus(d))
    # the coefficient matrix ((1, 0), (0, d*g)) is diagonal
    return DivisorAL(d_dot_p, d_dot_t / l_dot_t)
