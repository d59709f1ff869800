"""K-theory classes on the plane as Chern character triples.

A class is the triple (r, c, e): the rank, the degree of the first Chern
class, and the second Chern character ch_2.  Integrality of the actual
second Chern class forces e - c^2/2 to be an integer (so 2e is always an
integer); the constructor enforces this.

Two Euler pairings coexist on purpose.  euler_product integrates
ch(v) ch(w) Td against the plane with no dualization; it is the pairing
whose radical cuts out wall divisors.  euler_hom first dualizes its left
argument and computes the alternating sum of Ext dimensions chi(v, w).
Call sites must choose explicitly; nothing in this module guesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exactmath import Scalar


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class ChernP2:
    """Chern character (rank, degree, ch_2) of a class on the plane."""

    r: int
    c: int
    e: Fraction

    def __init__(self, r: int, c: int, e: Scalar):
        if not isinstance(r, int) or not isinstance(c, int):
            raise DomainError("rank and degree must be integers")
        ee = _frac(e)
        if ee.denominator not in (1, 2):
            raise DomainError(f"2*ch_2 must be an integer, got ch_2 = {ee}")
        if (ee - Fraction(c * c, 2)).denominator != 1:
            raise DomainError(
                f"ch_2 - c^2/2 must be an integer (integral second Chern class); "
                f"got (r, c, e) = ({r}, {c}, {ee})")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "e", ee)

    def __add__(self, other: "ChernP2") -> "ChernP2":
        return ChernP2(self.r + other.r, self.c + other.c, self.e + other.e)

    def __sub__(self, other: "ChernP2") -> "ChernP2":
        return ChernP2(self.r - other.r, self.c - other.c, self.e - other.e)

    def __neg__(self) -> "ChernP2":
        return ChernP2(-self.r, -self.c, -self.e)

    def __mul__(self, n: int) -> "ChernP2":
        if not isinstance(n, int):
            return NotImplemented
        return ChernP2(n * self.r, n * self.c, n * self.e)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.r},{self.c},{self.e}"


def parse_chern(text: str) -> ChernP2:
    """Parse "r,c,e" with e a rational such as -7/2."""
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 3:
        raise DomainError(f"expected a Chern character as r,c,e, got {text!r}")
    try:
        r, c = int(parts[0]), int(parts[1])
        e = Fraction(parts[2])
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse Chern character {text!r}") from exc
    return ChernP2(r, c, e)


def line_bundle(k: int) -> ChernP2:
    """ch of O(k): (1, k, k^2/2)."""
    return ChernP2(1, k, Fraction(k * k, 2))


def ideal_twisted(n: int, k: int) -> ChernP2:
    """ch of the ideal sheaf of n plane points twisted by k: (1, k, k^2/2 - n)."""
    if n < 0:
        raise DomainError("number of points must be nonnegative")
    return ChernP2(1, k, Fraction(k * k, 2) - n)


def point() -> ChernP2:
    """ch of a point sheaf: (0, 0, 1)."""
    return ChernP2(0, 0, Fraction(1))


def line_support(k: int) -> ChernP2:
    """ch of O_l(k) for a line l: (0, 1, k - 1/2)."""
    return ChernP2(0, 1, k - Fraction(1, 2))


def moduli(d: int) -> ChernP2:
    """ch of the sheaves parameterized by the degree-d moduli space: (0, d, (2-3d)/2)."""
    if d < 1:
        raise DomainError("moduli degree must be at least 1")
    return ChernP2(0, d, Fraction(2 - 3 * d, 2))


def dual(v: ChernP2) -> ChernP2:
    """The derived dual: (r, -c, e)."""
    return ChernP2(v.r, -v.c, v.e)


def twist(v: ChernP2, k: int) -> ChernP2:
    """Tensor with O(k): (r, c + k r, e + k c + k^2 r / 2)."""
    return ChernP2(v.r, v.c + k * v.r, v.e + k * v.c + Fraction(k * k * v.r, 2))


def shift(v: ChernP2) -> ChernP2:
    """Homological shift by one: negates the class."""
    return -v


def euler_product(v: ChernP2, w: ChernP2) -> Fraction:
    """Euler pairing with no dualization: integral of ch(v) ch(w) Td.

    Symmetric in its arguments.  Classes orthogonal to a moduli class
    under this pairing correspond to divisors on the moduli space.
    """
    return ((v.r * w.e + v.c * w.c + v.e * w.r)
            + Fraction(3, 2) * (v.r * w.c + v.c * w.r)
            + v.r * w.r)


def euler_hom(v: ChernP2, w: ChernP2) -> Fraction:
    """chi(v, w) = sum (-1)^i ext^i(v, w); equals euler_product(dual(v), w)."""
    return ((v.r * w.e - v.c * w.c + v.e * w.r)
            + Fraction(3, 2) * (v.r * w.c - v.c * w.r)
            + v.r * w.r)


@dataclass(frozen=True)
class HilbertPolynomial:
    """Coefficients of chi(v(m)) as a polynomial in the twist m."""

    quadratic: Fraction
    linear: Fraction
    constant: Fraction

    def __call__(self, m: int) -> Fraction:
        return self.quadratic * m * m + self.linear * m + self.constant

    def __str__(self) -> str:
        parts: list[str] = []
        for coef, mono in ((self.quadratic, "m^2"), (self.linear, "m"),
                           (self.constant, "")):
            if coef == 0:
                continue
            mag = abs(coef)
            body = mono if (mono and mag == 1) else (f"{mag}*{mono}" if mono else str(mag))
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"


def hilbert_polynomial(v: ChernP2) -> HilbertPolynomial:
    """chi(v(m)) = (r/2) m^2 + (c + 3r/2) m + (e + 3c/2 + r)."""
    return HilbertPolynomial(
        quadratic=Fraction(v.r, 2),
        linear=v.c + Fraction(3 * v.r, 2),
        constant=v.e + Fraction(3 * v.c, 2) + v.r,
    )
