from functools import lru_cache
from pathlib import Path

import pytest

from higher_voronoi import SiteSet
from higher_voronoi.pointsfile import generate_sites

FIXTURES = Path(__file__).parent / "fixtures"
CAMPAIGN_BOX = 1000


@lru_cache(maxsize=None)
def random_sites(n: int, seed: int, box: int = CAMPAIGN_BOX) -> SiteSet:
    return generate_sites(n, seed, box)


@pytest.fixture
def triangle():
    return SiteSet.checked([(0, 0), (4, 0), (1, 3)])


@pytest.fixture
def interior4():
    """Site 4 strictly inside triangle 123: three empty circles."""
    return SiteSet.checked([(0, 0), (10, 0), (5, 9), (5, 4)])


@pytest.fixture
def convex4():
    """Convex quadrilateral whose non-Delaunay diagonal joins sites 2 and 3:
    two empty circles, and the pair {2,3} never forms a region."""
    return SiteSet.checked([(10, 0), (0, 0), (12, 7), (1, 9)])


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        title, ok = mod.RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}")
