"""Poincare polynomial engine.

Conventions: the coefficient of q^i is the 2i-th Betti number, so smooth
projective spaces give palindromic polynomials with nonnegative integer
coefficients and the value at q = 1 is the Euler characteristic.

Three independent point-count engines feed the final assembly:

  * Hilbert schemes of plane points, by the infinite-product generating
    function truncated at the needed order;
  * Kronecker quiver moduli, by the Harder-Narasimhan recursion over the
    field of rational functions in q (the stack count of all
    representations minus the strata of destabilizing filtrations);
  * a finite-field brute force that literally counts semistable tuples of
    matrices over F_p, used as an oracle for the recursion's conventions.

The wall-crossing assembly then adds, for each wall, the difference of two
projective-bundle polynomials times the polynomial of the wall's center,
with exceptional-bundle ranks given by Euler pairings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import combinations
from typing import NamedTuple

import numpy as np

from . import ktheory
from .errors import ConventionError, DomainError
from .exactmath import (QPoly, QRational, grassmannian_poincare,
                        projective_poincare, q_minus_one_power_factor)
from .ktheory import ChernP2, euler_hom

#: Poincare polynomials are plain QPoly values with nonnegative coefficients.
PoincarePolynomial = QPoly

MAX_HILB_POINTS = 12


# ---------------------------------------------------------------------------
# Hilbert schemes of points

@cache
def hilb_poincare(n: int) -> QPoly:
    """Poincare polynomial of the Hilbert scheme of n plane points.

    Coefficient of z^n in prod_{k>=1} of the three geometric series in
    q^{k-1} z^k, q^k z^k, q^{k+1} z^k, truncated at order n.
    """
    if not 0 <= n <= MAX_HILB_POINTS:
        raise DomainError(f"Hilbert scheme size must be in 0..{MAX_HILB_POINTS}")
    series: list[QPoly] = [QPoly.zero()] * (n + 1)
    series[0] = QPoly.one()
    for k in range(1, n + 1):
        for j in (k - 1, k, k + 1):
            # multiply by the geometric series of q^j z^k, in place
            for t in range(k, n + 1):
                series[t] = series[t] + series[t - k].shifted(j)
    return series[n]


_HILB_MODEL_RULES = {
    # (n, k) -> (base, corrections); each correction ((s, b), dims) adds
    # (P(P^s) - P(P^b)) times a product of projective spaces of those dims
    (3, 1): ("hilb", 3, [((0, 3), (2,))]),
    (4, 1): ("hilb", 4, [((1, 4), (2,))]),
    (4, 2): ("model", (4, 1), [((0, 3), (2, 2))]),
    (5, 2): ("hilb", 5, [((2, 5), (2,)), ((1, 4), (2, 2))]),
}


def hilb_model_poincare(n: int, k: int) -> QPoly:
    """Poincare polynomial of the k-th birational model of Hilb^n.

    Model 0 is the Hilbert scheme itself.  The supported corrected models
    are (3,1), (4,1), (4,2), (5,2); the final model (8,6) is a Grassmannian
    Gr(2,9)-bundle over the plane.
    """
    if k == 0:
        return hilb_poincare(n)
    if (n, k) == (8, 6):
        return grassmannian_poincare(2, 9) * projective_poincare(2)
    rule = _HILB_MODEL_RULES.get((n, k))
    if rule is None:
        raise DomainError(f"no tabulated birational model (Hilb^{n})_{k}")
    base_kind, base_arg, corrections = rule
    out = hilb_poincare(base_arg) if base_kind == "hilb" else hilb_model_poincare(*base_arg)
    for (small, big), centers in corrections:
        center = QPoly.one()
        for m in centers:
            center = center * projective_poincare(m)
        out = out + (projective_poincare(small) - projective_poincare(big)) * center
    return out


# ---------------------------------------------------------------------------
# Kronecker quiver moduli

class DimVector(NamedTuple):
    """Dimension vector (e, f) of a quiver representation."""

    e: int
    f: int


def _as_dimvector(dv: "DimVector | tuple[int, int]") -> DimVector:
    dv = DimVector(*dv)
    if dv.e < 0 or dv.f < 0 or dv == (0, 0):
        raise DomainError(f"invalid dimension vector {dv}")
    return dv


def _ord_poly(n: int) -> QPoly:
    """prod_{i<n} (q^n - q^i): the order of GL_n over the field with q elements."""
    out = QPoly.one()
    for i in range(n):
        out = out * (QPoly.monomial(n) - QPoly.monomial(i))
    return out


def _quiver_euler(m: int, a: tuple[int, int], b: tuple[int, int]) -> int:
    # <(e,f),(e',f')> = e e' + f f' - m e f'
    return a[0] * b[0] + a[1] * b[1] - m * a[0] * b[1]


def _slope(part: tuple[int, int]) -> Fraction:
    return Fraction(part[0], part[0] + part[1])


def _hn_decompositions(e: int, f: int) -> list[tuple[tuple[int, int], ...]]:
    """Ordered decompositions into >= 2 nonzero parts of strictly decreasing slope."""
    out: list[tuple[tuple[int, int], ...]] = []

    def rec(re: int, rf: int, prev: Fraction | None, acc: list[tuple[int, int]]):
        if re == 0 and rf == 0:
            if len(acc) >= 2:
                out.append(tuple(acc))
            return
        for a in range(re + 1):
            for b in range(rf + 1):
                if a == 0 and b == 0:
                    continue
                s = _slope((a, b))
                if prev is not None and s >= prev:
                    continue
                acc.append((a, b))
                rec(re - a, rf - b, s, acc)
                acc.pop()

    rec(e, f, None, [])
    return out


@cache
def _hn_stack_count(m: int, e: int, f: int) -> QRational:
    """Generating count of the semistable stack with dimension vector (e, f).

    All-representations count q^{m e f} / (ord(e) ord(f)) minus, for each
    Harder-Narasimhan type (strictly decreasing slopes), the product of the
    semistable counts of its parts times q to minus the sum of the quiver
    Euler pairings of each later part against each earlier part.
    """
    total = QRational(QPoly.monomial(m * e * f), _ord_poly(e) * _ord_poly(f))
    for parts in _hn_decompositions(e, f):
        exponent = 0
        for k in range(len(parts)):
            for l in range(k + 1, len(parts)):
                exponent -= _quiver_euler(m, parts[l], parts[k])
        term = QRational.q_power(exponent)
        for a, b in parts:
            term = term * _hn_stack_count(m, a, b)
        total = total - term
    return total


def kronecker_poincare(m: int, dv: "DimVector | tuple[int, int]") -> QPoly:
    """Poincare polynomial of the m-arrow Kronecker quiver moduli space.

    Needs a coprime dimension vector, so that semistable = stable and the
    moduli count is (q - 1) times the stack count.  The result must be a
    polynomial with nonnegative integer coefficients of degree
    m e f - e^2 - f^2 + 1; anything else signals a convention error and is
    reported instead of repaired.
    """
    if m < 1:
        raise DomainError("the quiver needs at least one arrow")
    dv = _as_dimvector(dv)
    if math.gcd(dv.e, dv.f) != 1:
        raise DomainError(f"dimension vector {tuple(dv)} is not coprime; "
                          "the moduli point count needs gcd(e, f) = 1")
    value = q_minus_one_power_factor(1) * _hn_stack_count(m, dv.e, dv.f)
    if not value.is_polynomial():
        raise ConventionError(
            f"(q-1) * stack count for {tuple(dv)} is not a polynomial; "
            "the recursion's sign convention has drifted")
    poly = value.as_qpoly()
    expected_degree = m * dv.e * dv.f - dv.e ** 2 - dv.f ** 2 + 1
    if any(c < 0 for c in poly.coefficients) or poly.degree != expected_degree:
        raise ConventionError(
            f"moduli polynomial for {tuple(dv)} fails its shape checks: "
            f"{poly} (expected degree {expected_degree})")
    return poly


# ---------------------------------------------------------------------------
# Finite-field brute force

MAX_BRUTE_FORCE_EXPONENT = 20


def _gaussian_at(k: int, n: int, p: int) -> int:
    value = grassmannian_poincare(k, n)(p)
    assert isinstance(value, int)
    return value


def _rank_count(f: int, e: int, r: int, p: int) -> int:
    """Number of f x e matrices over F_p of rank r."""
    out = _gaussian_at(r, e, p)
    for i in range(r):
        out *= p ** f - p ** i
    return out


def _subspace_bases(e: int, p: int) -> list[tuple[int, np.ndarray]]:
    """All nonzero subspaces of F_p^e as (dim, reduced-echelon basis matrix)."""
    out = []
    for k in range(1, e + 1):
        for pivots in combinations(range(e), k):
            free = [(row, col)
                    for row, piv in enumerate(pivots)
                    for col in range(piv + 1, e) if col not in pivots]
            for stamp in range(p ** len(free)):
                basis = np.zeros((k, e), dtype=np.int32)
                for row, piv in enumerate(pivots):
                    basis[row, piv] = 1
                rest = stamp
                for row, col in free:
                    basis[row, col] = rest % p
                    rest //= p
                out.append((k, basis))
    return out


def _det3(a: np.ndarray) -> np.ndarray:
    return (a[:, 0, 0] * (a[:, 1, 1] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 1])
            - a[:, 0, 1] * (a[:, 1, 0] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 0])
            + a[:, 0, 2] * (a[:, 1, 0] * a[:, 2, 1] - a[:, 1, 1] * a[:, 2, 0]))


def _stable_completions(psi: np.ndarray, m: int, e: int, f: int, p: int,
                        subspaces: list[tuple[int, np.ndarray]]) -> int:
    """Count (m-1)-tuples completing the fixed first matrix to a semistable tuple.

    A tuple is destabilized by a subspace E' of dimension k exactly when
    the span of all its images has dimension at most (k f - 1) // e; the
    span-dimension bounds are tested through vanishing minors, filtering
    the surviving sample indices after every minor to keep the work small.
    """
    nfree = (m - 1) * f * e
    total = p ** nfree
    idx = np.arange(total, dtype=np.int64)
    phis = [np.broadcast_to(psi, (total, f, e))]
    for j in range(m - 1):
        arr = np.empty((total, f * e), dtype=np.int32)
        base = j * f * e
        for i in range(f * e):
            arr[:, i] = (idx // p ** (base + i)) % p
        phis.append(arr.reshape(total, f, e))
    destabilized = np.zeros(total, dtype=bool)
    for k, basis in subspaces:
        bound = (k * f - 1) // e
        images = np.concatenate([(phi @ basis.T) % p for phi in phis], axis=2)
        ncols = images.shape[2]
        if bound == 0:
            destabilized |= (images == 0).all(axis=(1, 2))
            continue
        cand = np.nonzero(~destabilized)[0]
        if bound == 1:
            for rows in combinations(range(f), 2):
                for cols in combinations(range(ncols), 2):
                    if cand.size == 0:
                        break
                    sub = images[np.ix_(cand, rows, cols)]
                    det = (sub[:, 0, 0] * sub[:, 1, 1]
                           - sub[:, 0, 1] * sub[:, 1, 0]) % p
                    cand = cand[det == 0]
                if cand.size == 0:
                    break
        elif bound == 2:
            for rows in combinations(range(f), 3):
                for cols in combinations(range(ncols), 3):
                    if cand.size == 0:
                        break
                    det = _det3(images[np.ix_(cand, rows, cols)]) % p
                    cand = cand[det == 0]
                if cand.size == 0:
                    break
        else:  # bound <= f - 1 <= 2 whenever f <= 3
            raise DomainError("span-dimension bound above 2 is not supported")
        destabilized[cand] = True
    return int(total - destabilized.sum())


def brute_force_kronecker_count(m: int, dv: "DimVector | tuple[int, int]",
                                p: int) -> int:
    """Point count of the Kronecker moduli space over F_p by enumeration.

    Counts m-tuples of f x e matrices with no destabilizing subspace pair
    and divides by the free (GL_e x GL_f)/scalars action.  The enumeration
    fixes the first matrix in its rank normal form and weights by orbit
    size, which leaves the count unchanged and removes a factor p^{e f}
    from the search space.  Completely independent of the recursion: only
    linear algebra over F_p enters.
    """
    dv = _as_dimvector(dv)
    e, f = dv
    if m < 1:
        raise DomainError("the quiver needs at least one arrow")
    if math.gcd(e, f) != 1:
        raise DomainError(f"dimension vector {tuple(dv)} is not coprime")
    if m * e * f > MAX_BRUTE_FORCE_EXPONENT:
        raise DomainError(
            f"enumeration of p^{m * e * f} tuples is infeasible "
            f"(limit p^{MAX_BRUTE_FORCE_EXPONENT})")
    if p < 2 or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
        raise DomainError(f"{p} is not a prime")
    if p ** (m * e * f) > 400_000_000:
        raise DomainError(
            f"enumeration of {p}^{m * e * f} tuples is infeasible")
    if min(e, f) > 3:
        raise DomainError("brute force supports min(e, f) <= 3")
    if e < f:
        # transposing every matrix is a stability-preserving bijection
        e, f = f, e
    subspaces = _subspace_bases(e, p)
    stable = 0
    for r in range(min(e, f) + 1):
        orbit = _rank_count(f, e, r, p)
        if orbit == 0:
            continue
        psi = np.zeros((f, e), dtype=np.int32)
        for i in range(r):
            psi[i, i] = 1
        stable += orbit * _stable_completions(psi, m, e, f, p, subspaces)
    group_order = 1
    for n in (e, f):
        for i in range(n):
            group_order *= p ** n - p ** i
    numerator = stable * (p - 1)
    if numerator % group_order != 0:
        raise ConventionError(
            "stable tuple count is not divisible by the group order; "
            "the stability test is inconsistent")
    return numerator // group_order


# ---------------------------------------------------------------------------
# Wall-crossing assembly

class SpaceDescriptor:
    """Marker base class for the space algebra below."""

    __slots__ = ()


@dataclass(frozen=True)
class Projective(SpaceDescriptor):
    n: int


@dataclass(frozen=True)
class Grassmannian(SpaceDescriptor):
    k: int
    n: int


@dataclass(frozen=True)
class Hilb(SpaceDescriptor):
    n: int


@dataclass(frozen=True)
class HilbModel(SpaceDescriptor):
    n: int
    k: int


@dataclass(frozen=True)
class KroneckerModuli(SpaceDescriptor):
    m: int
    e: int
    f: int


@dataclass(frozen=True)
class Product(SpaceDescriptor):
    factors: tuple[SpaceDescriptor, ...]


@dataclass(frozen=True)
class Bundle(SpaceDescriptor):
    """A fiber bundle with rational fiber: Poincare polynomials multiply."""

    fiber: SpaceDescriptor
    base: SpaceDescriptor


def space_poincare(sd: SpaceDescriptor) -> QPoly:
    """Poincare polynomial of a described space."""
    match sd:
        case Projective(n):
            return projective_poincare(n)
        case Grassmannian(k, n):
            return grassmannian_poincare(k, n)
        case Hilb(n):
            return hilb_poincare(n)
        case HilbModel(n, k):
            return hilb_model_poincare(n, k)
        case KroneckerModuli(m, e, f):
            return kronecker_poincare(m, (e, f))
        case Product(factors):
            out = QPoly.one()
            for factor in factors:
                out = out * space_poincare(factor)
            return out
        case Bundle(fiber, base):
            return space_poincare(fiber) * space_poincare(base)
        case _:
            raise DomainError(f"unsupported space descriptor {sd!r}")


@dataclass(frozen=True)
class WallRecord:
    """An actual wall: its destabilizer and the base of the flipped locus."""

    label: str
    destabilizer: ChernP2
    base: SpaceDescriptor


def ext_dims_at_wall(d: int, destab: ChernP2) -> tuple[int, int]:
    """Fiber dimensions (a, b) of the two exceptional projective bundles.

    With Q the quotient class moduli - destabilizer, a = -chi(Q, destab)
    and b = -chi(destab, Q).  Exactly one Ext group is assumed to survive,
    so both pairings must come out negative; a nonnegative value raises
    ConventionError instead of being silently flipped.
    """
    quotient = ktheory.moduli(d) - destab
    chi_in = euler_hom(quotient, destab)
    chi_out = euler_hom(destab, quotient)
    if chi_in >= 0 or chi_out >= 0:
        raise ConventionError(
            f"expected negative Euler pairings at the wall, got "
            f"chi(Q, destab) = {chi_in}, chi(destab, Q) = {chi_out}")
    if chi_in.denominator != 1 or chi_out.denominator != 1:
        raise ConventionError("Euler pairings at a wall must be integers")
    return int(-chi_in), int(-chi_out)


def wall_contribution(d: int, rec: WallRecord) -> QPoly:
    """Change of the Poincare polynomial when flipping one wall's locus.

    (P(P^{a-1}) - P(P^{b-1})) times the polynomial of the flipped locus's
    base, where a and b are the exceptional fiber dimensions.
    """
    a, b = ext_dims_at_wall(d, rec.destabilizer)
    bundles = projective_poincare(a - 1) - projective_poincare(b - 1)
    return bundles * space_poincare(rec.base)


def m6_wall_records() -> tuple[WallRecord, ...]:
    """The six flipping walls of the degree-6 moduli space, innermost first."""
    return (
        WallRecord("W1", ChernP2(1, 3, Fraction(-7, 2)), HilbModel(8, 6)),
        WallRecord("W1'", ChernP2(1, 2, -2),
                   Product((HilbModel(4, 2), Hilb(2)))),
        WallRecord("W2", ChernP2(1, 1, Fraction(-1, 2)),
                   Product((HilbModel(5, 2), Projective(2)))),
        WallRecord("W3", ChernP2(1, 2, -1),
                   Product((HilbModel(3, 1), Projective(2)))),
        WallRecord("W4", ChernP2(1, 1, Fraction(1, 2)), HilbModel(4, 1)),
        WallRecord("W5", ChernP2(1, 2, 0), Hilb(2)),
    )


def n6_poincare() -> QPoly:
    """Poincare polynomial of the 3-Kronecker moduli with dimension vector (5, 4)."""
    return kronecker_poincare(3, (5, 4))


def q6_poincare() -> QPoly:
    """Poincare polynomial of the P^17-bundle model over the Kronecker space."""
    return space_poincare(Bundle(Projective(17), KroneckerModuli(3, 5, 4)))


def assemble_m6() -> QPoly:
    """Poincare polynomial of the degree-6 moduli space by wall crossing.

    Starts from the outermost birational model (the projective bundle over
    the Kronecker moduli space) and adds the contribution of each of the
    six flipping walls.
    """
    total = q6_poincare()
    for rec in m6_wall_records():
        total = total + wall_contribution(6, rec)
    return total
