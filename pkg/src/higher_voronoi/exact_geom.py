"""Exact rational points and planar predicates.

Every coordinate is a :class:`fractions.Fraction`. Nothing in this package
ever rounds, so "collinear" and "cocircular" are decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Iterable, Optional, Sequence

Rat = Fraction


class DegenerateTripleError(ValueError):
    """Raised when a predicate needs three non-collinear points."""


class GeneralPositionError(ValueError):
    """Raised when a site set has duplicates, 3 collinear or 4 cocircular sites."""

    def __init__(self, violation: "Violation"):
        super().__init__(str(violation))
        self.violation = violation


def to_rat(value) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to an exact Fraction.

    Floats are rejected: they would smuggle binary rounding into the input.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact coordinate")


def format_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_rat(self.x))
        object.__setattr__(self, "y", to_rat(self.y))

    def dist2(self, other: "Point") -> Fraction:
        dx = self.x - other.x
        dy = self.y - other.y
        return dx * dx + dy * dy

    def __str__(self):
        return f"({format_rat(self.x)}, {format_rat(self.y)})"


@dataclass(frozen=True)
class Circle:
    defining_labels: frozenset
    center: Point
    r_squared: Fraction


@dataclass(frozen=True)
class Violation:
    kind: str  # "duplicate" | "collinear" | "cocircular"
    labels: tuple

    def __str__(self):
        return f"{self.kind} {{{','.join(map(str, self.labels))}}}"


class SiteSet:
    """Ordered, labelled point set. Labels are 1..n by position.

    Construction only checks ``n >= 3``; use :meth:`checked` (or
    :func:`validate_general_position`) for the general-position contract.
    """

    def __init__(self, points: Iterable):
        pts = []
        for p in points:
            pts.append(p if isinstance(p, Point) else Point(*p))
        if len(pts) < 3:
            raise ValueError(f"need at least 3 sites, got {len(pts)}")
        self.points: tuple = tuple(pts)

    @classmethod
    def checked(cls, points: Iterable) -> "SiteSet":
        sites = cls(points)
        violation = validate_general_position(sites)
        if violation is not None:
            raise GeneralPositionError(violation)
        return sites

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def labels(self) -> range:
        return range(1, self.n + 1)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, label: int) -> Point:
        """Site by 1-based label."""
        if not 1 <= label <= self.n:
            raise IndexError(f"label {label} outside 1..{self.n}")
        return self.points[label - 1]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        return isinstance(other, SiteSet) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"SiteSet([{', '.join(map(str, self.points))}])"


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orientation(p: Point, q: Point, r: Point) -> int:
    """+1 for a counterclockwise turn p->q->r, -1 clockwise, 0 collinear."""
    return _sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def in_circle(a: Point, b: Point, c: Point, p: Point) -> int:
    """+1 if p is strictly inside the circle through a, b, c; 0 on it; -1 outside.

    The result does not depend on the order of a, b, c.
    """
    turn = orientation(a, b, c)
    if turn == 0:
        raise DegenerateTripleError(f"collinear triple {a}, {b}, {c}")
    if turn < 0:
        b, c = c, b
    adx, ady = a.x - p.x, a.y - p.y
    bdx, bdy = b.x - p.x, b.y - p.y
    cdx, cdy = c.x - p.x, c.y - p.y
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    det = (
        adx * (bdy * clift - blift * cdy)
        - ady * (bdx * clift - blift * cdx)
        + alift * (bdx * cdy - bdy * cdx)
    )
    return _sign(det)


def circumcenter(a: Point, b: Point, c: Point, labels: Sequence[int] = ()) -> Circle:
    """Circle through three non-collinear points, center and radius exact."""
    bx, by = b.x - a.x, b.y - a.y
    cx, cy = c.x - a.x, c.y - a.y
    d = 2 * (bx * cy - by * cx)
    if d == 0:
        raise DegenerateTripleError(f"collinear triple {a}, {b}, {c}")
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    center = Point(a.x + ux, a.y + uy)
    return Circle(frozenset(labels), center, ux * ux + uy * uy)


def circle_of(sites: SiteSet, triple: Iterable[int]) -> Circle:
    i, j, k = sorted(triple)
    return circumcenter(sites[i], sites[j], sites[k], (i, j, k))


def validate_general_position(sites: SiteSet) -> Optional[Violation]:
    """Return the first violation found (duplicates, then collinear, then
    cocircular, each in lexicographic label order), or None if clean."""
    labelled = list(zip(sites.labels, sites.points))
    for (i, p), (j, q) in combinations(labelled, 2):
        if p == q:
            return Violation("duplicate", (i, j))
    for (i, p), (j, q), (k, r) in combinations(labelled, 3):
        if orientation(p, q, r) == 0:
            return Violation("collinear", (i, j, k))
    for (i, p), (j, q), (k, r), (m, s) in combinations(labelled, 4):
        if in_circle(p, q, r, s) == 0:
            return Violation("cocircular", (i, j, k, m))
    return None
