"""Exit criteria. Every comparison is an exact integer equality.

One PASS/FAIL line per criterion is printed in the pytest terminal summary.
"""

import json
import time
from contextlib import contextmanager
from itertools import combinations

import pytest

from higher_voronoi import cli
from higher_voronoi.invariants import CHECK_NAMES, check_all, closed_reduced_c, closed_reduced_f
from higher_voronoi.poset import VoronoiPoset, is_graded, is_lattice, minimal_upper_bounds
from higher_voronoi.regions import nonempty_regions, region_full_dimensional, region_nonempty

from conftest import FIXTURES, random_sites

CAMPAIGN_NS = range(3, 11)
CAMPAIGN_SEEDS = range(25)
N4_TRIALS = 200

PUBLISHED_TABLE = """\
3 | (4, 6) | (2)
4 | (5, 9) | (4)
5 | (6, 12, 14) | (6, 8)
6 | (7, 15, 19) | (8, 12)
7 | (8, 18, 24, 26) | (10, 16, 18)
8 | (9, 21, 29, 33) | (12, 20, 24)
9 | (10, 24, 34, 40, 42) | (14, 24, 30, 32)
10 | (11, 27, 39, 47, 51) | (16, 28, 36, 40)
11 | (12, 30, 44, 54, 60, 62) | (18, 32, 42, 48, 50)
12 | (13, 33, 49, 61, 69, 73) | (20, 36, 48, 56, 60)
"""

RESULTS = {}


@contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        RESULTS[number] = (title, False)
        raise
    RESULTS[number] = (title, True)


@pytest.fixture(scope="module")
def campaign():
    """(n, seed) -> (sites, regions, report) for every campaign instance."""
    out = {}
    for n in CAMPAIGN_NS:
        for seed in CAMPAIGN_SEEDS:
            sites = random_sites(n, seed)
            regions = nonempty_regions(sites)
            out[n, seed] = (sites, regions, check_all(sites, regions=regions))
    return out


def run_cli(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_1_table_closed_form(capsys):
    with criterion(1, "closed-form table n=3..12 matches the published rows, < 1 s"):
        start = time.perf_counter()
        code, out, _ = run_cli(capsys, "table", "--from", 3, "--to", 12)
        elapsed = time.perf_counter() - start
        assert code == 0
        assert out == PUBLISHED_TABLE
        assert elapsed < 1.0


def test_2_table_empirical(campaign):
    with criterion(2, "observed reduced f/c vectors equal closed form, n=3..10 x 25 seeds"):
        for (n, seed), (_, _, report) in campaign.items():
            assert report.reduced_f == closed_reduced_f(n), (n, seed)
            assert report.reduced_c == closed_reduced_c(n), (n, seed)


def test_3_identity_campaign(campaign):
    with criterion(3, "all named identities hold exactly, n=3..10 x 25 seeds"):
        for (n, seed), (_, _, report) in campaign.items():
            fams = report.families()
            missing = [name for name in CHECK_NAMES if name not in fams]
            assert not missing, missing
            failed = [ch.name for ch in report.failures]
            assert not failed, (n, seed, failed)


def test_4_n4_dichotomy():
    with criterion(4, "n=4: 15 elements, one missing 2-set or 3-set, both classes, non-lattice witness"):
        classes = {2: 0, 3: 0}
        for seed in range(N4_TRIALS):
            sites = random_sites(4, seed)
            poset = VoronoiPoset(4, nonempty_regions(sites))
            assert len(poset) == 15, seed
            missing = poset.missing()
            assert len(missing) == 1 and len(missing[0]) in (2, 3), (seed, missing)
            gap = missing[0]
            classes[len(gap)] += 1
            if len(gap) == 2:
                a, b = sorted(gap)
                bounds = minimal_upper_bounds(poset, {a}, {b})
                assert len(bounds) == 2, (seed, bounds)
                assert all(len(u) == 3 and gap < u for u in bounds)
                verdict = is_lattice(poset)
                assert not verdict.is_lattice
                assert verdict.witness == (frozenset({a}), frozenset({b}))
        assert classes[2] > 0 and classes[3] > 0, classes


def test_5_euler_characteristic(campaign):
    with criterion(5, "reduced Euler characteristic: 0 for odd n, odd for n=4,8, even for n=6,10"):
        for (n, seed), (_, _, report) in campaign.items():
            if n in (3, 5, 7, 9):
                assert report.chi == 0, (n, seed)
            elif n in (4, 8):
                assert report.chi % 2 == 1, (n, seed, report.chi)
            elif n in (6, 10):
                assert report.chi % 2 == 0, (n, seed, report.chi)


def test_6_regions_nondegenerate(campaign):
    with criterion(6, "nonempty == full-dimensional for every proper subset, n=3..8"):
        for (n, seed), (sites, regions, _) in campaign.items():
            if n > 8:
                continue
            members = {e for rank in regions for e in rank}
            for k in range(1, n):
                for a in combinations(sites.labels, k):
                    full = region_full_dimensional(sites, a)
                    assert region_nonempty(sites, a) == full, (n, seed, a)
                    assert (frozenset(a) in members) == full


def test_7_cross_path(campaign):
    with criterion(7, "four independent double-entry comparisons agree on every instance"):
        for (n, seed), (_, regions, report) in campaign.items():
            assert report.f_enumerated == report.f_from_c, (n, seed)
            assert report.e_direct == report.e_from_euler, (n, seed)
            assert report.v_from_circles == report.v_from_euler, (n, seed)
            assert report.f_inf_separability == report.f_inf_from_euler, (n, seed)
            poset = VoronoiPoset(n, regions)
            assert poset.rank_sizes()[1:] == report.f_enumerated
            assert is_graded(poset) == (True, None)


def test_8_determinism_and_format(capsys, monkeypatch, tmp_path):
    with criterion(8, "gen byte-stable, JSON float-free, analyze exit codes 0/1/2"):
        first = run_cli(capsys, "gen", "--n", 7, "--seed", 11, "--box", 1000)
        second = run_cli(capsys, "gen", "--n", 7, "--seed", 11, "--box", 1000)
        assert first == second and first[0] == 0

        points = tmp_path / "clean.txt"
        points.write_text(first[1])
        code, out, _ = run_cli(capsys, "analyze", points, "--poset")
        assert code == 0
        assert "." not in out
        doc = json.loads(out, parse_float=lambda s: pytest.fail(f"float {s} in report"))
        assert doc["clean"] is True

        code, _, err = run_cli(capsys, "analyze", FIXTURES / "unit_square.txt")
        assert code == 2 and "cocircular {1,2,3,4}" in err

        import higher_voronoi.invariants as inv

        real = inv.c_vector
        monkeypatch.setattr(inv, "c_vector", lambda s: list(reversed(real(s))))
        code, out, _ = run_cli(capsys, "analyze", FIXTURES / "interior4.txt")
        assert code == 1
        assert json.loads(out)["clean"] is False
