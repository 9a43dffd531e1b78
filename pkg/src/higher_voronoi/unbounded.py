"""Unbounded regions counted as k-sets: subsets a line cuts off from the rest."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Tuple

from .exact_geom import SiteSet, orientation


@lru_cache(maxsize=64)
def _sides(sites: SiteSet) -> Dict[Tuple[int, int], Tuple[int, ...]]:
    """For each line through two sites, the side (+1/-1/0) of every site, by label."""
    pts = sites.points
    return {
        (p, q): (0,) + tuple(orientation(pts[p - 1], pts[q - 1], z) for z in pts)
        for p, q in combinations(sites.labels, 2)
    }


def separable(sites: SiteSet, labels: Iterable[int]) -> bool:
    """Is there a line with the sites of A strictly on one side and the rest
    strictly on the other?

    If a separating line exists it can be moved until it passes through two
    sites while every other site stays strictly on its side; conversely such
    a line through two sites can be nudged to put those two on either side.
    Under general position only the two defining sites lie on the line.
    """
    inside = frozenset(labels)
    if not inside or len(inside) == sites.n:
        raise ValueError("separability needs a nonempty proper subset")
    for (p, q), side in _sides(sites).items():
        side_in = side_out = 0
        ok = True
        for z in sites.labels:
            if z == p or z == q:
                continue
            s = side[z]
            if z in inside:
                if side_in == 0:
                    side_in = s
                elif s != side_in:
                    ok = False
                    break
                if s == side_out:
                    ok = False
                    break
            else:
                if side_out == 0:
                    side_out = s
                elif s != side_out:
                    ok = False
                    break
                if s == side_in:
                    ok = False
                    break
        if ok:
            return True
    return False


def f_inf_vector(sites: SiteSet) -> List[int]:
    """[f_0^inf, ..., f_n^inf]; both ends are 0 by convention."""
    n = sites.n
    counts = [0] * (n + 1)
    for k in range(1, n):
        counts[k] = sum(1 for a in combinations(sites.labels, k) if separable(sites, a))
    return counts
