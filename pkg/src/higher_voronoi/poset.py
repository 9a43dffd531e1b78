"""The poset of label sets with nonempty Voronoi region, ordered by inclusion."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from .exact_geom import SiteSet
from .regions import DEFAULT_MAX_N, nonempty_regions


def label_key(labels: frozenset) -> tuple:
    return (len(labels), tuple(sorted(labels)))


def format_labels(labels: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(labels)) + "}"


@dataclass
class VoronoiPoset:
    n: int
    elements_by_rank: List[List[frozenset]]
    _elements: tuple = field(init=False, repr=False)
    _members: frozenset = field(init=False, repr=False)

    def __post_init__(self):
        self.elements_by_rank = [sorted(r, key=label_key) for r in self.elements_by_rank]
        self._elements = tuple(e for r in self.elements_by_rank for e in r)
        self._members = frozenset(self._elements)

    @property
    def elements(self) -> tuple:
        """All members, by rank then lexicographically."""
        return self._elements

    def __contains__(self, labels) -> bool:
        return frozenset(labels) in self._members

    def __len__(self):
        return len(self._members)

    def rank_sizes(self) -> List[int]:
        return [len(r) for r in self.elements_by_rank]

    def missing(self) -> List[frozenset]:
        """Subsets of [n] that are not members, in (size, lex) order."""
        out = []
        for k in range(self.n + 1):
            for c in combinations(range(1, self.n + 1), k):
                if frozenset(c) not in self._members:
                    out.append(frozenset(c))
        return out


def build_poset(sites: SiteSet, max_n: int = DEFAULT_MAX_N) -> VoronoiPoset:
    return VoronoiPoset(sites.n, nonempty_regions(sites, max_n))


def is_graded(poset: VoronoiPoset) -> Tuple[bool, Optional[frozenset]]:
    """Every non-bottom element covers something one rank down and every
    non-top element is covered by something one rank up.

    With rank = cardinality this is the same as all maximal chains having
    length n, without enumerating chains.
    """
    ranks = poset.elements_by_rank
    n = poset.n
    top = frozenset(range(1, n + 1))
    if ranks[0] != [frozenset()]:
        return False, frozenset()
    if ranks[n] != [top]:
        return False, top
    for k in range(1, n + 1):
        for e in ranks[k]:
            if not any(d < e for d in ranks[k - 1]):
                return False, e
    for k in range(n):
        for e in ranks[k]:
            if not any(e < u for u in ranks[k + 1]):
                return False, e
    return True, None


def _minimal(sets: List[frozenset]) -> List[frozenset]:
    sets = sorted(sets, key=label_key)
    out = []
    for s in sets:
        if not any(m <= s for m in out):
            out.append(s)
    return out


def _maximal(sets: List[frozenset]) -> List[frozenset]:
    sets = sorted(sets, key=label_key, reverse=True)
    out = []
    for s in sets:
        if not any(s <= m for m in out):
            out.append(s)
    return sorted(out, key=label_key)


def minimal_upper_bounds(poset: VoronoiPoset, x, y) -> List[frozenset]:
    u = frozenset(x) | frozenset(y)
    return _minimal([e for e in poset.elements if u <= e])


def maximal_lower_bounds(poset: VoronoiPoset, x, y) -> List[frozenset]:
    m = frozenset(x) & frozenset(y)
    return _maximal([e for e in poset.elements if e <= m])


@dataclass(frozen=True)
class LatticeVerdict:
    is_lattice: bool
    witness: Optional[Tuple[frozenset, frozenset]] = None
    side: Optional[str] = None  # "join" or "meet"
    bounds: Tuple[frozenset, ...] = ()

    def __bool__(self):
        return self.is_lattice


def is_lattice(poset: VoronoiPoset) -> LatticeVerdict:
    """Check unique joins and meets for every pair; the witness is the first
    failing pair in (size, lex) element order."""
    elems = poset.elements
    for i, x in enumerate(elems):
        for y in elems[i + 1:]:
            ub = minimal_upper_bounds(poset, x, y)
            if len(ub) != 1:
                return LatticeVerdict(False, (x, y), "join", tuple(ub))
            lb = maximal_lower_bounds(poset, x, y)
            if len(lb) != 1:
                return LatticeVerdict(False, (x, y), "meet", tuple(lb))
    return LatticeVerdict(True)


@dataclass(frozen=True)
class EulerReport:
    face_counts: List[int]  # index 0 is the empty face, then f_1 .. f_n
    chi: int


def euler_from_f(f: List[int]) -> EulerReport:
    faces = [1] + list(f)
    # position p holds the faces of dimension p - 1
    chi = sum(cnt if p % 2 == 1 else -cnt for p, cnt in enumerate(faces))
    return EulerReport(faces, chi)


def euler_characteristic(poset: VoronoiPoset) -> EulerReport:
    return euler_from_f(poset.rank_sizes()[1:])


def hasse_edges(poset: VoronoiPoset) -> List[Tuple[frozenset, frozenset]]:
    ranks = poset.elements_by_rank
    edges = []
    for k in range(poset.n):
        for lo in ranks[k]:
            for hi in ranks[k + 1]:
                if lo < hi:
                    edges.append((lo, hi))
    return edges


def hasse_lines(poset: VoronoiPoset) -> List[str]:
    return [f"{format_labels(lo)} < {format_labels(hi)}" for lo, hi in hasse_edges(poset)]
