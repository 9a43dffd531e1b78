from itertools import combinations

import pytest

from higher_voronoi.poset import (
    VoronoiPoset,
    build_poset,
    euler_characteristic,
    euler_from_f,
    format_labels,
    hasse_edges,
    hasse_lines,
    is_graded,
    is_lattice,
    maximal_lower_bounds,
    minimal_upper_bounds,
)

from conftest import random_sites


def fs(*labels):
    return frozenset(labels)


def all_subsets(n):
    return [[frozenset(c) for c in combinations(range(1, n + 1), k)] for k in range(n + 1)]


def test_triangle_full_poset(triangle):
    p = build_poset(triangle)
    assert len(p) == 8
    assert p.missing() == []
    assert is_graded(p) == (True, None)
    assert is_lattice(p)
    assert euler_characteristic(p).chi == 0


def test_interior_site_poset(interior4):
    p = build_poset(interior4)
    assert p.missing() == [fs(1, 2, 3)]
    assert p.rank_sizes() == [1, 4, 6, 3, 1]
    assert is_graded(p)[0]
    assert euler_characteristic(p).chi == -1
    # computed verdict, recorded: joins of {1,2},{1,3} etc. all collapse to the top
    assert is_lattice(p).is_lattice


def test_convex_poset_not_lattice(convex4):
    p = build_poset(convex4)
    assert p.missing() == [fs(2, 3)]
    assert minimal_upper_bounds(p, {2}, {3}) == [fs(1, 2, 3), fs(2, 3, 4)]
    verdict = is_lattice(p)
    assert not verdict
    assert verdict.witness == (fs(2), fs(3))
    assert verdict.side == "join"
    assert euler_characteristic(p).chi == 1


def test_minimal_upper_bounds_basic(triangle):
    p = build_poset(triangle)
    assert minimal_upper_bounds(p, {1}, {2}) == [fs(1, 2)]
    assert minimal_upper_bounds(p, {1}, {1, 3}) == [fs(1, 3)]
    assert maximal_lower_bounds(p, {1, 2}, {1, 3}) == [fs(1)]


def test_maximal_lower_bounds_two_way():
    ranks = all_subsets(4)
    ranks[2] = [s for s in ranks[2] if s != fs(2, 3)]
    p = VoronoiPoset(4, ranks)
    assert maximal_lower_bounds(p, {1, 2, 3}, {2, 3, 4}) == [fs(2), fs(3)]
    # the join side of the same gap is found first
    assert is_lattice(p).witness == (fs(2), fs(3))


def test_boolean_lattice():
    assert is_lattice(VoronoiPoset(4, all_subsets(4)))


def test_graded_negative_cases():
    ranks = all_subsets(3)
    ranks[2] = [fs(1, 2)]
    ranks[1] = [fs(1), fs(2), fs(3)]
    ok, witness = is_graded(VoronoiPoset(3, ranks))
    assert not ok and witness == fs(3)  # {3} is covered by nothing of rank 2

    ranks = all_subsets(3)
    ranks[1] = [fs(2)]
    ok, witness = is_graded(VoronoiPoset(3, ranks))
    assert not ok and witness == fs(1, 3)

    ranks = all_subsets(3)
    ranks[3] = []
    assert is_graded(VoronoiPoset(3, ranks)) == (False, fs(1, 2, 3))


def test_hasse_triangle(triangle):
    edges = hasse_edges(build_poset(triangle))
    assert len(edges) == 12
    assert edges[:3] == [(fs(), fs(1)), (fs(), fs(2)), (fs(), fs(3))]


def test_hasse_interior(interior4):
    p = build_poset(interior4)
    edges = hasse_edges(p)
    assert (fs(1, 2), fs(1, 2, 4)) in edges
    assert (fs(1, 2), fs(1, 2, 3)) not in edges
    lines = hasse_lines(p)
    assert "{1,2} < {1,2,4}" in lines
    assert lines[0] == "{} < {1}"
    assert lines == hasse_lines(build_poset(interior4))


def test_format_labels():
    assert format_labels(fs(3, 1)) == "{1,3}"
    assert format_labels(fs()) == "{}"


@pytest.mark.parametrize(
    "f, chi",
    [([3, 3, 1], 0), ([4, 5, 4, 1], 1), ([4, 6, 3, 1], -1)],
)
def test_euler_examples(f, chi):
    report = euler_from_f(f)
    assert report.chi == chi
    assert report.face_counts == [1] + f


@pytest.mark.parametrize("n", range(3, 9))
def test_random_posets_graded_and_counts(n):
    for seed in range(3):
        p = build_poset(random_sites(n, seed))
        assert is_graded(p) == (True, None)
        assert p.elements_by_rank[0] == [fs()]
        assert p.elements_by_rank[n] == [frozenset(range(1, n + 1))]
        assert len(p.elements_by_rank[1]) == n
