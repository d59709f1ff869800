"""Exact scalar and polynomial arithmetic in one variable q.

Three layers, all immutable and exact:

  Rational   -- arbitrary-precision rational numbers.  This is an alias for
                fractions.Fraction, which already stores values reduced with
                a positive denominator and prints as "num/den" (the "/den"
                part omitted when the denominator is 1), exactly the wire
                format used by the command line.
  QPoly      -- polynomials in q with integer coefficients, stored as a
                tuple of coefficients in ascending powers with trailing
                zeros trimmed.  The zero polynomial has degree None.
  QRational  -- quotients of two QPoly values, stored with common factors
                cancelled.  Equality compares by cross-multiplication, so
                no canonical form is assumed by callers.

Division of polynomials is only ever exact division: exact_div raises
ExactDivisionError when a remainder (or a fractional quotient coefficient)
appears, which downstream modules use as a correctness check rather than
an inconvenience.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cache
from typing import Iterable, Union

from .errors import DomainError, ExactDivisionError

Rational = Fraction

Scalar = Union[int, Fraction]


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" (or "num") into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc


def format_rational(value: Scalar) -> str:
    """Render a rational as "num/den", omitting "/den" when it is 1."""
    return str(Fraction(value))


class QPoly:
    """An integer-coefficient polynomial in the variable q."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = list(coefficients)
        for c in coeffs:
            if not isinstance(c, int):
                raise DomainError(f"QPoly coefficients must be integers, got {c!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._c = tuple(coeffs)

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> "QPoly":
        """The polynomial coefficient * q**power."""
        if power < 0:
            raise DomainError("monomial power must be nonnegative")
        return cls((0,) * power + (coefficient,))

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial; None for the zero polynomial."""
        return len(self._c) - 1 if self._c else None

    def coefficient(self, power: int) -> int:
        return self._c[power] if 0 <= power < len(self._c) else 0

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self._c))

    def __add__(self, other: "QPoly | int") -> "QPoly":
        other = _as_qpoly(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __sub__(self, other: "QPoly | int") -> "QPoly":
        return self + (-_as_qpoly(other))

    def __rsub__(self, other: "QPoly | int") -> "QPoly":
        return _as_qpoly(other) + (-self)

    def __mul__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            return QPoly(tuple(other * c for c in self._c))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise DomainError("negative polynomial powers are not defined")
        out = QPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x: Scalar) -> Scalar:
        """Evaluate at a rational or integer point, exactly."""
        acc: Scalar = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def shifted(self, k: int) -> "QPoly":
        """Multiply by q**k."""
        if k < 0:
            raise DomainError("shift exponent must be nonnegative")
        return QPoly((0,) * k + self._c) if self._c else QPoly()

    def content_and_valuation(self) -> tuple[int, int]:
        """gcd of coefficients and the lowest power with nonzero coefficient."""
        if not self._c:
            return 0, 0
        g = 0
        for c in self._c:
            g = math.gcd(g, c)
        v = next(i for i, c in enumerate(self._c) if c)
        return g, v

    def exact_div(self, divisor: "QPoly") -> "QPoly":
        """Exact polynomial quotient self / divisor.

        Raises ExactDivisionError if the division leaves a remainder or
        forces a non-integer coefficient; callers rely on this to detect
        convention drift.
        """
        q = self._try_exact_div(divisor)
        if q is None:
            raise ExactDivisionError("polynomial division is not exact")
        return q

    def _try_exact_div(self, divisor: "QPoly") -> "QPoly | None":
        b = divisor._c
        if not b:
            raise DomainError("division by the zero polynomial")
        a = self._c
        if not a:
            return QPoly()
        if len(a) < len(b):
            return None
        rem = list(a)
        lead = b[-1]
        out = [0] * (len(a) - len(b) + 1)
        for i in range(len(a) - len(b), -1, -1):
            c = rem[i + len(b) - 1]
            if c % lead != 0:
                return None
            t = c // lead
            out[i] = t
            if t:
                for j, y in enumerate(b):
                    rem[i + j] -= t * y
        if any(rem):
            return None
        return QPoly(out)

    def divides(self, other: "QPoly") -> bool:
        return other._try_exact_div(self) is not None

    def to_coefficient_strings(self) -> list[str]:
        """Serialize as the JSON wire format: coefficient strings, ascending."""
        return [str(c) for c in self._c]

    @classmethod
    def from_coefficient_strings(cls, items: Iterable[str]) -> "QPoly":
        return cls(tuple(int(s) for s in items))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, c in enumerate(self._c):
            if c == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({list(self._c)!r})"


def _as_qpoly(value: "QPoly | int") -> QPoly:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly((value,))
    raise TypeError(f"cannot interpret {value!r} as a QPoly")


def q_minus_one_power_factor(k: int) -> QPoly:
    """The polynomial q**k - 1."""
    if k < 1:
        raise DomainError("factor exponent must be positive")
    return QPoly.monomial(k) - QPoly.one()


def _primitive(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    if g <= 1:
        return coeffs
    return tuple(c // g for c in coeffs)


def _pseudo_rem(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # lc(b)^(deg a - deg b + 1) * a  mod  b, over the integers
    da, db = len(a) - 1, len(b) - 1
    lead = b[-1]
    rem = list(a)
    for i in range(da - db, -1, -1):
        c = rem[i + db]
        if c:
            for j in range(len(rem)):
                rem[j] *= lead
            for j, y in enumerate(b):
                rem[i + j] -= c * y
        # after this pass the coefficient at i+db is zero
    while rem and rem[-1] == 0:
        rem.pop()
    return tuple(rem)


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """A gcd of two integer polynomials, primitive with positive leading coefficient."""
    x, y = a._c, b._c
    if len(x) < len(y):
        x, y = y, x
    if not x:
        return QPoly()
    x = _primitive(x)
    if y:
        y = _primitive(y)
    while y:
        x, y = y, _primitive(_pseudo_rem(x, y))
    return QPoly(x if x[-1] > 0 else tuple(-c for c in x))


class QRational:
    """A reduced quotient of two integer polynomials in q."""

    __slots__ = ("num", "den")

    def __init__(self, numerator: QPoly | int, denominator: QPoly | int = 1):
        num = _as_qpoly(numerator)
        den = _as_qpoly(denominator)
        if not den:
            raise DomainError("QRational denominator must be nonzero")
        if den._c[-1] < 0:
            num, den = -num, -den
        if num and den != QPoly.one():
            num, den = _reduce_fraction(num, den)
        elif not num:
            den = QPoly.one()
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: QPoly | int) -> "QRational":
        return cls(p, QPoly.one())

    @classmethod
    def q_power(cls, exponent: int) -> "QRational":
        """q**exponent for any integer exponent, negative included."""
        if exponent >= 0:
            return cls(QPoly.monomial(exponent))
        return cls(QPoly.one(), QPoly.monomial(-exponent))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QRational):
            return self.num * other.den == other.num * self.den
        if isinstance(other, (QPoly, int)):
            return self.num == _as_qpoly(other) * self.den
        return NotImplemented

    def __hash__(self):
        raise TypeError("QRational is unhashable; compare with ==")

    def __neg__(self) -> "QRational":
        out = object.__new__(QRational)
        out.num, out.den = -self.num, self.den
        return out

    def __add__(self, other: "QRational") -> "QRational":
        other = _as_qrational(other)
        if self.den == other.den:
            return QRational(self.num + other.num, self.den)
        return QRational(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: "QRational") -> "QRational":
        return self + (-_as_qrational(other))

    def __rsub__(self, other: "QRational") -> "QRational":
        return _as_qrational(other) + (-self)

    def __mul__(self, other: "QRational | QPoly | int") -> "QRational":
        other = _as_qrational(other)
        return QRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "QRational | QPoly | int") -> "QRational":
        other = _as_qrational(other)
        if not other.num:
            raise DomainError("division of QRational by zero")
        return QRational(self.num * other.den, self.den * other.num)

    def is_polynomial(self) -> bool:
        return self.den.divides(self.num)

    def as_qpoly(self) -> QPoly:
        """Collapse to a polynomial; raises ExactDivisionError otherwise."""
        return self.num.exact_div(self.den)

    def __call__(self, x: Scalar) -> Scalar:
        d = self.den(x)
        if d == 0:
            raise DomainError("evaluation at a pole")
        return Fraction(self.num(x), d) if isinstance(x, int) else self.num(x) / d

    def __str__(self) -> str:
        if self.den == QPoly.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"QRational({self.num!r}, {self.den!r})"


def _as_qrational(value: "QRational | QPoly | int") -> QRational:
    if isinstance(value, QRational):
        return value
    return QRational.from_poly(_as_qpoly(value))


def _reduce_fraction(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    """Cancel content, q-powers, q**k - 1 factors, then any leftover gcd.

    Denominators produced by the Harder-Narasimhan recursion are products
    of q-powers and q**k - 1 factors, so the trial-division passes do
    nearly all the work cheaply; the final gcd pass guarantees the stored
    form is fully reduced regardless of where the inputs came from.
    """
    ng, nv = num.content_and_valuation()
    dg, dv = den.content_and_valuation()
    g = math.gcd(ng, dg)
    v = min(nv, dv)
    if g > 1 or v:
        num = QPoly(tuple(c // g for c in num._c[v:]))
        den = QPoly(tuple(c // g for c in den._c[v:]))
    k = len(den._c) - 1
    while k >= 1:
        f = q_minus_one_power_factor(k)
        while True:
            dn = num._try_exact_div(f)
            if dn is None:
                break
            dd = den._try_exact_div(f)
            if dd is None:
                break
            num, den = dn, dd
        k = min(k - 1, len(den._c) - 1)
    if den.degree:
        g_poly = poly_gcd(num, den)
        if g_poly.degree:
            num = num.exact_div(g_poly)
            den = den.exact_div(g_poly)
    # normalize the content sign pairing once more after cancellations
    if den._c and den._c[-1] < 0:
        num, den = -num, -den
    return num, den


def projective_poincare(n: int) -> QPoly:
    """Poincare polynomial of n-dimensional complex projective space.

    1 + q + ... + q**n, with q marking cohomological degree 2.
    """
    if n < 0:
        raise DomainError("projective space dimension must be nonnegative")
    return QPoly((1,) * (n + 1))


@cache
def _gaussian(k: int, n: int) -> QPoly:
    if k == 0 or k == n:
        return QPoly.one()
    # q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k]
    return _gaussian(k - 1, n - 1) + _gaussian(k, n - 1).shifted(k)


def grassmannian_poincare(k: int, n: int) -> QPoly:
    """The Gaussian binomial coefficient [n choose k]_q.

    Equals the Poincare polynomial of the Grassmannian Gr(k, n); at q = 1
    it specializes to the ordinary binomial coefficient.
    """
    if not 0 <= k <= n:
        raise DomainError(f"Gaussian binomial needs 0 <= k <= n, got k={k}, n={n}")
    return _gaussian(k, n)


def is_palindromic(p: QPoly) -> bool:
    """Whether the coefficient list reads the same in both directions."""
    if not p:
        raise DomainError("palindromicity of the zero polynomial is undefined")
    return p.coefficients == p.coefficients[::-1]
