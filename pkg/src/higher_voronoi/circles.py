"""Circle census: the order of every site-triple circle and the c-vector."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List

from .exact_geom import Circle, SiteSet, circle_of, in_circle


@dataclass(frozen=True)
class CircleRecord:
    circle: Circle
    order: int


def circle_order(sites: SiteSet, triple) -> int:
    """Number of sites strictly inside the circle through the three given labels."""
    i, j, k = sorted(triple)
    a, b, c = sites[i], sites[j], sites[k]
    return sum(
        1
        for label in sites.labels
        if label not in (i, j, k) and in_circle(a, b, c, sites[label]) > 0
    )


def circle_records(sites: SiteSet) -> List[CircleRecord]:
    return [
        CircleRecord(circle_of(sites, t), circle_order(sites, t))
        for t in combinations(sites.labels, 3)
    ]


def c_vector(sites: SiteSet) -> List[int]:
    """[c_0, ..., c_{n-3}]: c_i counts circles with exactly i sites inside."""
    counts = [0] * (sites.n - 2)
    for t in combinations(sites.labels, 3):
        counts[circle_order(sites, t)] += 1
    return counts


def c_at(cv: List[int], i: int) -> int:
    """c_i, with zero outside 0..n-3."""
    return cv[i] if 0 <= i < len(cv) else 0


def v_vector_from_circles(cv: List[int]) -> List[int]:
    """[v_1, ..., v_n] where v_k = c_{k-1} + c_{k-2}.

    A circle of order j has its center as a vertex of the order j+1 and
    order j+2 diagrams.
    """
    n = len(cv) + 2
    return [c_at(cv, k - 1) + c_at(cv, k - 2) for k in range(1, n + 1)]
