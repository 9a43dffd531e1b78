"""Plain-text point files and the seeded general-position generator.

File format: one ``x y`` pair per line, each coordinate an integer or a
``p/q`` rational. ``#`` starts a comment line; blank lines are skipped.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from typing import Iterable, List

from .exact_geom import Point, SiteSet, format_rat, validate_general_position

DEFAULT_BUDGET = 10_000


class PointsFileError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}" if lineno else message)
        self.lineno = lineno


class GenerationError(RuntimeError):
    pass


def _coord(token: str, lineno: int) -> Fraction:
    try:
        if "." in token or "e" in token.lower():
            raise ValueError
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise PointsFileError(lineno, f"bad coordinate {token!r} (want integer or p/q)") from None


def parse_points(text: str) -> List[Point]:
    points = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PointsFileError(lineno, f"expected 'x y', got {line!r}")
        points.append(Point(_coord(parts[0], lineno), _coord(parts[1], lineno)))
    if len(points) < 3:
        raise PointsFileError(0, f"need at least 3 points, found {len(points)}")
    return points


def format_points(points: Iterable[Point], header: str = "") -> str:
    lines = [f"# {header}"] if header else []
    lines += [f"{format_rat(p.x)} {format_rat(p.y)}" for p in points]
    return "\n".join(lines) + "\n"


def load_points(path: str) -> List[Point]:
    """Read a points file, or the ``points`` of a JSON report written by analyze."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        return [Point(Fraction(x), Fraction(y)) for x, y in doc["points"]]
    return parse_points(text)


def generate_sites(n: int, seed: int, box: int, budget: int = DEFAULT_BUDGET) -> SiteSet:
    """n integer points uniform in [0, box]^2, redrawn until in general position.

    The whole set is redrawn on rejection, so the result depends only on
    (n, seed, box).
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if box < 1:
        raise ValueError("box must be at least 1")
    rng = random.Random(seed)
    for _ in range(budget):
        pts = [Point(rng.randint(0, box), rng.randint(0, box)) for _ in range(n)]
        sites = SiteSet(pts)
        if validate_general_position(sites) is None:
            return sites
    raise GenerationError(
        f"no general-position set for n={n}, seed={seed}, box={box} after {budget} draws"
    )
