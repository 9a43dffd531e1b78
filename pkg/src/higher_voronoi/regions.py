"""Order-k Voronoi regions as exact halfplane intersections.

The region of a label set A is the set of points at least as close to every
site of A as to every site outside A. Nonemptiness is a two-variable linear
feasibility question, answered here by Fourier-Motzkin elimination in exact
integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm
from typing import Dict, Iterable, List, Sequence, Tuple

from .exact_geom import Point, SiteSet

DEFAULT_MAX_N = 14

Row = Tuple[int, int, int]


class EnumerationGuardError(ValueError):
    """Raised when exhaustive subset enumeration is requested for too many sites."""

    def __init__(self, n: int, max_n: int):
        super().__init__(f"n={n} exceeds the enumeration guard max_n={max_n}")
        self.n = n
        self.max_n = max_n


@dataclass(frozen=True)
class HalfPlane:
    """The closed halfplane a*x + b*y <= c."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a == 0 and self.b == 0:
            raise ValueError("halfplane normal must be nonzero")

    def contains(self, p: Point, strict: bool = False) -> bool:
        lhs = self.a * p.x + self.b * p.y
        return lhs < self.c if strict else lhs <= self.c

    def integer_row(self) -> Row:
        """Same constraint scaled by a positive integer so all coefficients are ints."""
        m = lcm(self.a.denominator, self.b.denominator, self.c.denominator)
        return (int(self.a * m), int(self.b * m), int(self.c * m))


def halfplane(x: Point, y: Point) -> HalfPlane:
    """Points at least as close to x as to y."""
    if x == y:
        raise ValueError(f"identical points {x} have no bisector")
    return HalfPlane(
        2 * (y.x - x.x),
        2 * (y.y - x.y),
        (y.x * y.x + y.y * y.y) - (x.x * x.x + x.y * x.y),
    )


def _eliminate_x(rows: Sequence[Row]) -> List[Tuple[int, int]]:
    upper, lower, rest = [], [], []
    for a, b, c in rows:
        if a > 0:
            upper.append((a, b, c))
        elif a < 0:
            lower.append((a, b, c))
        else:
            rest.append((b, c))
    # positive multipliers -al and au cancel x exactly
    for au, bu, cu in upper:
        for al, bl, cl in lower:
            rest.append((-al * bu + au * bl, -al * cu + au * cl))
    return rest


def _feasible_rows(rows: Sequence[Row], strict: bool) -> bool:
    lo = hi = None
    for b, c in _eliminate_x(rows):
        if b == 0:
            if c < 0 or (strict and c == 0):
                return False
            continue
        bound = Fraction(c, b)
        if b > 0:
            if hi is None or bound < hi:
                hi = bound
        elif lo is None or bound > lo:
            lo = bound
    if lo is None or hi is None:
        return True
    return lo < hi if strict else lo <= hi


def feasible(constraints: Iterable[HalfPlane], strict: bool = False) -> bool:
    """Does some point satisfy every constraint (with < instead of <= if strict)?"""
    return _feasible_rows([h.integer_row() for h in constraints], strict)


@lru_cache(maxsize=64)
def _pair_rows(sites: SiteSet) -> Dict[Tuple[int, int], Row]:
    return {
        (i, j): halfplane(sites[i], sites[j]).integer_row()
        for i in sites.labels
        for j in sites.labels
        if i != j
    }


def _region_rows(sites: SiteSet, labels: frozenset) -> List[Row]:
    rows = _pair_rows(sites)
    outside = [j for j in sites.labels if j not in labels]
    return [rows[i, j] for i in labels for j in outside]


def region_nonempty(sites: SiteSet, labels: Iterable[int]) -> bool:
    """Is there a point whose |A| nearest sites can be taken to be exactly A?"""
    return _feasible_rows(_region_rows(sites, frozenset(labels)), strict=False)


def region_full_dimensional(sites: SiteSet, labels: Iterable[int]) -> bool:
    """Does the region of A have interior (strictly feasible system)?"""
    return _feasible_rows(_region_rows(sites, frozenset(labels)), strict=True)


def nonempty_regions(sites: SiteSet, max_n: int = DEFAULT_MAX_N) -> List[List[frozenset]]:
    """Label sets with nonempty region, grouped by size 0..n, each rank in
    lexicographic order. Every subset is decided on its own."""
    n = sites.n
    if n > max_n:
        raise EnumerationGuardError(n, max_n)
    ranks = []
    for k in range(n + 1):
        ranks.append(
            [frozenset(c) for c in combinations(sites.labels, k) if region_nonempty(sites, c)]
        )
    return ranks


def f_vector_enumerate(sites: SiteSet, max_n: int = DEFAULT_MAX_N) -> List[int]:
    """[f_1, ..., f_n] by deciding every subset."""
    return [len(rank) for rank in nonempty_regions(sites, max_n)[1:]]
