"""Edges of all order-k diagrams, read off the bisector arrangement.

The bisector of sites a and b carries the circumcenters of (a, b, x) for the
n-2 other sites x. Between consecutive centers the set of sites strictly
closer than a (equivalently b) is constant, so each of the n-1 pieces is a
single edge of the order j+1 diagram, j being that set's size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Tuple

from .exact_geom import Point, SiteSet, circle_of


@dataclass(frozen=True)
class BisectorSegmentation:
    pair: Tuple[int, int]
    cut_parameters: Tuple[Fraction, ...]
    segment_orders: Tuple[int, ...]


def _sample_parameters(cuts: List[Fraction]) -> List[Fraction]:
    samples = [cuts[0] - 1]
    samples += [(s + t) / 2 for s, t in zip(cuts, cuts[1:])]
    samples.append(cuts[-1] + 1)
    return samples


def bisector_segments(sites: SiteSet, a: int, b: int) -> BisectorSegmentation:
    if a == b:
        raise ValueError("bisector needs two distinct labels")
    a, b = sorted((a, b))
    pa, pb = sites[a], sites[b]
    mx, my = (pa.x + pb.x) / 2, (pa.y + pb.y) / 2
    # direction of the bisector: (pb - pa) turned by 90 degrees
    dx, dy = pa.y - pb.y, pb.x - pa.x
    norm2 = dx * dx + dy * dy
    others = [x for x in sites.labels if x not in (a, b)]

    cuts = []
    for x in others:
        c = circle_of(sites, (a, b, x)).center
        cuts.append(((c.x - mx) * dx + (c.y - my) * dy) / norm2)
    cuts.sort()
    if any(s == t for s, t in zip(cuts, cuts[1:])):
        raise ValueError(f"coincident circumcenters on bisector {a},{b}")

    orders = []
    for t in _sample_parameters(cuts):
        q = Point(mx + t * dx, my + t * dy)
        r2 = q.dist2(pa)
        orders.append(sum(1 for z in others if q.dist2(sites[z]) < r2))
    return BisectorSegmentation((a, b), tuple(cuts), tuple(orders))


def all_segmentations(sites: SiteSet) -> List[BisectorSegmentation]:
    return [bisector_segments(sites, a, b) for a, b in combinations(sites.labels, 2)]


def e_vector(sites: SiteSet) -> List[int]:
    """[e_1, ..., e_n]; a segment with j closer sites is an edge of order j+1."""
    counts = [0] * sites.n
    for seg in all_segmentations(sites):
        for j in seg.segment_orders:
            counts[j] += 1
    return counts
