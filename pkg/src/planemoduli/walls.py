"""Bridgeland potential walls as semicircles in the stability half-plane.

A wall is stored by its center x-coordinate and its *squared* radius, both
exact rationals: printed radii like sqrt(46)/3 are irrational, their
squares are not, and every comparison this module makes is a comparison of
squares.  Chamber location works by taking the top point (center, radius)
of a wall and counting the reference walls that strictly enclose it, an
exact squared-distance test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ktheory
from .divisors import first_wall_destabilizer
from .errors import AmbiguousChamberError, DomainError, EmptyWallError, NoWallError
from .exactmath import Scalar
from .ktheory import ChernP2


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Wall:
    """A semicircular wall: center (x, 0), squared radius radius_sq > 0."""

    center: Fraction
    radius_sq: Fraction

    def __init__(self, center: Scalar, radius_sq: Scalar):
        rsq = _frac(radius_sq)
        if rsq <= 0:
            raise EmptyWallError(f"squared radius must be positive, got {rsq}")
        object.__setattr__(self, "center", _frac(center))
        object.__setattr__(self, "radius_sq", rsq)

    def twisted(self, n: int) -> "Wall":
        return Wall(self.center + n, self.radius_sq)

    def dualized(self) -> "Wall":
        return Wall(-self.center, self.radius_sq)

    def encloses(self, other: "Wall") -> bool:
        """Whether the top point of `other` lies strictly inside this semicircle."""
        gap = (other.center - self.center) ** 2 + other.radius_sq
        if gap == self.radius_sq:
            raise AmbiguousChamberError(
                f"top point of {other} lies exactly on {self}")
        return gap < self.radius_sq

    def __str__(self) -> str:
        return f"wall(center={self.center}, radius_sq={self.radius_sq})"


@dataclass(frozen=True)
class TaggedWall:
    """A reference wall remembering the x-parameter it was tabulated under."""

    x: Fraction
    wall: Wall


@dataclass(frozen=True)
class ReferenceWallSystem:
    """An ordered system of reference walls for one Hilbert scheme."""

    label: str
    walls: tuple[TaggedWall, ...]

    @classmethod
    def from_entries(cls, label: str,
                     entries: list[tuple[Fraction, Wall]]) -> "ReferenceWallSystem":
        tagged = tuple(TaggedWall(x, w) for x, w in
                       sorted(entries, key=lambda e: e[1].radius_sq, reverse=True))
        return cls(label, tagged)

    def twisted(self, n: int) -> "ReferenceWallSystem":
        return ReferenceWallSystem(
            f"{self.label}+{n}" if n >= 0 else f"{self.label}{n}",
            tuple(TaggedWall(t.x, t.wall.twisted(n)) for t in self.walls))

    def dualized(self) -> "ReferenceWallSystem":
        return ReferenceWallSystem(
            f"{self.label}^",
            tuple(TaggedWall(t.x, t.wall.dualized()) for t in self.walls))


def wall_between(v: ChernP2, w: ChernP2) -> Wall:
    """The potential wall where the classes v and w have equal phase.

    With (r, c, e) the components, the semicircle has
    center x = (r e' - r' e) / (r c' - r' c) and squared radius
    x^2 - 2 (c e' - c' e) / (r c' - r' c).
    """
    denom = Fraction(v.r * w.c - w.r * v.c)
    if denom == 0:
        raise NoWallError(f"classes {v} and {w} span no semicircular wall")
    x = (v.r * w.e - w.r * v.e) / denom
    radius_sq = x * x - 2 * (v.c * w.e - w.c * v.e) / denom
    if radius_sq <= 0:
        raise EmptyWallError(
            f"classes {v} and {w} give an empty wall (radius_sq = {radius_sq})")
    return Wall(x, radius_sq)


def enumerate_potential_walls(d: int) -> list[tuple[ChernP2, Wall]]:
    """All rank-one destabilizer candidates between the collapsing and first walls.

    Candidates are (1, c', e') with 0 <= c' <= d/2, an integral second
    Chern class, e' <= c'^2/2, and a wall radius between the collapsing
    wall (against the structure sheaf) and the first wall, inclusive.
    Sorted by descending squared radius, so candidates sharing a wall are
    adjacent.  These are potential walls only; whether a wall is actual is
    curated data, not a numeric criterion.
    """
    if d < 3:
        raise DomainError("potential wall enumeration needs degree >= 3")
    v = ktheory.moduli(d)
    lo = wall_between(v, ktheory.line_bundle(0)).radius_sq
    hi = wall_between(v, first_wall_destabilizer(d)).radius_sq
    found: list[tuple[ChernP2, Wall]] = []
    for c in range(d // 2 + 1):
        e = Fraction(c * c, 2)
        while True:
            cand = ChernP2(1, c, e)
            try:
                wall = wall_between(v, cand)
            except EmptyWallError:
                break
            if wall.radius_sq < lo:
                break
            if wall.radius_sq <= hi:
                found.append((cand, wall))
            e -= 1
    found.sort(key=lambda cw: (-cw[1].radius_sq, cw[0].c, -cw[0].e))
    return found


def transform_walls(ws: ReferenceWallSystem, op: str, n: int = 0) -> ReferenceWallSystem:
    """Apply "twist" (centers shift by n) or "dual" (centers negate) to a system."""
    if op == "twist":
        return ws.twisted(n)
    if op == "dual":
        return ws.dualized()
    raise DomainError(f"unknown wall transform {op!r}; expected 'twist' or 'dual'")


def locate_model(wall: Wall, refs: ReferenceWallSystem) -> int:
    """Index of the birational model whose chamber contains the wall's top point.

    Counts the reference walls strictly enclosing (center, radius); raises
    AmbiguousChamberError if the top point lies exactly on a reference wall.
    """
    return sum(1 for t in refs.walls if t.wall.encloses(wall))


def abch_reference_walls(n: int) -> ReferenceWallSystem:
    """Tabulated wall systems for the Hilbert scheme of n plane points.

    For n = 8 the tabulated x-parameters are -17/2 (listed twice in the
    source table; stored once, since a duplicate cannot change an
    enclosure count), -15/2, -13/2, -11/2, -5, -9/2, -25/6 with squared
    radius x^2 - 16.  For n = 4 they are -9/2, -7/2, -3 with squared
    radius x^2 - 8.
    """
    if n == 8:
        xs = [Fraction(-17, 2), Fraction(-15, 2), Fraction(-13, 2),
              Fraction(-11, 2), Fraction(-5), Fraction(-9, 2), Fraction(-25, 6)]
        shift = 16
    elif n == 4:
        xs = [Fraction(-9, 2), Fraction(-7, 2), Fraction(-3)]
        shift = 8
    else:
        raise DomainError(f"no tabulated reference walls for Hilb^{n}")
    entries = [(x, Wall(x, x * x - shift)) for x in xs]
    return ReferenceWallSystem.from_entries(f"hilb{n}", entries)
