"""Command line: gen, analyze, table, check."""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from .exact_geom import GeneralPositionError, SiteSet, format_rat, validate_general_position
from .invariants import CensusReport, check_all, closed_form_table, format_table_row
from .pointsfile import (
    DEFAULT_BUDGET,
    GenerationError,
    PointsFileError,
    format_points,
    generate_sites,
    load_points,
)
from .poset import (
    VoronoiPoset,
    hasse_edges,
    hasse_lines,
    is_graded,
    is_lattice,
    label_key,
)
from .regions import DEFAULT_MAX_N, EnumerationGuardError, nonempty_regions

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2

DEFAULT_BOX = 1000
TABLE_MAX_N = 50


def _labels(s) -> List[int]:
    return sorted(s)


def poset_document(poset: VoronoiPoset) -> dict:
    graded, graded_witness = is_graded(poset)
    lattice = is_lattice(poset)
    return {
        "members_by_rank": [[_labels(e) for e in rank] for rank in poset.elements_by_rank],
        "hasse_edges": [[_labels(lo), _labels(hi)] for lo, hi in hasse_edges(poset)],
        "is_graded": graded,
        "graded_witness": None if graded_witness is None else _labels(graded_witness),
        "is_lattice": lattice.is_lattice,
        "lattice_witness": None if lattice.witness is None else [_labels(w) for w in lattice.witness],
        "lattice_failure": lattice.side,
        "lattice_witness_bounds": [_labels(b) for b in lattice.bounds],
    }


def report_document(sites: SiteSet, report: CensusReport, poset: Optional[VoronoiPoset] = None) -> dict:
    """JSON-ready dict. Exact integers stay ints; coordinates become p/q strings."""
    doc = {
        "n": report.n,
        "points": [[format_rat(p.x), format_rat(p.y)] for p in sites],
        "c": report.c,
        "f": report.f_enumerated,
        "e": report.e_direct,
        "v": report.v_from_circles,
        "f_inf": report.f_inf_separability,
        "reduced_f": report.reduced_f,
        "reduced_c": report.reduced_c,
        "chi": report.chi,
        "paths": {
            "f_from_c": report.f_from_c,
            "e_from_euler": report.e_from_euler,
            "v_from_euler": report.v_from_euler,
            "f_inf_from_euler": report.f_inf_from_euler,
        },
        "clean": report.clean,
        "checks": [
            {"name": ch.name, "pass": ch.passed, "observed": ch.observed, "expected": ch.expected}
            for ch in report.checks
        ],
    }
    if poset is not None:
        doc["poset"] = poset_document(poset)
    return doc


_FLAT_LIST = re.compile(r"\[\s+([^\[\]{}]*?)\s+\]")


def dump_json(doc: dict) -> str:
    """Indented JSON with lists of scalars kept on one line."""
    text = json.dumps(doc, indent=2)
    text = _FLAT_LIST.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)
    return text + "\n"


def _guard_message(err: EnumerationGuardError) -> str:
    return (
        f"error: n={err.n} exceeds the enumeration guard of {err.max_n} sites; "
        f"pass --max-n {err.n} to raise it (runtime grows as 2^n)"
    )


def cmd_gen(args) -> int:
    try:
        sites = generate_sites(args.n, args.seed, args.box, args.budget)
    except (GenerationError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BAD_INPUT
    text = format_points(sites, header=f"n={args.n} seed={args.seed} box={args.box}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_analyze(args) -> int:
    try:
        sites = SiteSet(load_points(args.file))
    except (OSError, ValueError, KeyError, PointsFileError) as err:
        print(f"error: {args.file}: {err}", file=sys.stderr)
        return EXIT_BAD_INPUT
    violation = validate_general_position(sites)
    if violation is not None:
        print(f"error: not in general position: {violation}", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        regions = nonempty_regions(sites, args.max_n)
        report = check_all(sites, args.max_n, regions=regions)
    except EnumerationGuardError as err:
        print(_guard_message(err), file=sys.stderr)
        return EXIT_BAD_INPUT
    except GeneralPositionError as err:
        print(f"error: not in general position: {err}", file=sys.stderr)
        return EXIT_BAD_INPUT

    poset = VoronoiPoset(sites.n, regions) if (args.poset or args.hasse) else None
    doc = report_document(sites, report, poset if args.poset else None)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(dump_json(doc))
        print(summary_text(report))
    else:
        sys.stdout.write(dump_json(doc))
    if args.hasse:
        with open(args.hasse, "w", encoding="utf-8") as fh:
            fh.write("\n".join(hasse_lines(poset)) + "\n")
    return EXIT_OK if report.clean else EXIT_CHECK_FAILED


def summary_text(report: CensusReport) -> str:
    lines = [
        f"n={report.n} c={report.c} f={report.f_enumerated} e={report.e_direct} "
        f"v={report.v_from_circles} f_inf={report.f_inf_separability} chi={report.chi}"
    ]
    passed = sum(ch.passed for ch in report.checks)
    lines.append(f"checks: {passed}/{len(report.checks)} passed")
    for ch in report.failures:
        lines.append(f"  FAIL {ch.name}: observed {ch.observed} expected {ch.expected}")
    return "\n".join(lines)


def cmd_table(args) -> int:
    if not 3 <= args.n_from <= args.n_to <= TABLE_MAX_N:
        print(f"error: need 3 <= --from <= --to <= {TABLE_MAX_N}", file=sys.stderr)
        return EXIT_BAD_INPUT
    for n, rf, rc in closed_form_table(args.n_from, args.n_to):
        print(format_table_row(n, rf, rc))
    return EXIT_OK


def _run_trial(job):
    n, seed, box, max_n = job
    sites = generate_sites(n, seed, box)
    regions = nonempty_regions(sites, max_n)
    report = check_all(sites, max_n, regions=regions)
    missing = VoronoiPoset(n, regions).missing()
    return seed, report, [sorted(m) for m in sorted(missing, key=label_key)]


def cmd_check(args) -> int:
    if args.n < 3 or args.trials < 1:
        print("error: need --n >= 3 and --trials >= 1", file=sys.stderr)
        return EXIT_BAD_INPUT
    if args.n > args.max_n:
        print(_guard_message(EnumerationGuardError(args.n, args.max_n)), file=sys.stderr)
        return EXIT_BAD_INPUT
    jobs = [(args.n, args.seed + t, args.box, args.max_n) for t in range(args.trials)]
    try:
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                results = list(pool.map(_run_trial, jobs))
        else:
            results = [_run_trial(j) for j in jobs]
    except GenerationError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BAD_INPUT

    clean = sum(r.clean for _, r, _ in results)
    print(f"{clean}/{len(results)} clean")
    classes = Counter(
        (tuple(r.f_enumerated), len(missing)) for _, r, missing in results
    )
    print("poset classes (f-vector, missing subsets):")
    for (f, n_missing), count in sorted(classes.items()):
        print(f"  f={list(f)} missing={n_missing}: {count}")
    for seed, report, _ in results:
        if not report.clean:
            print(f"first failing instance: seed={seed}")
            print(summary_text(report))
            return EXIT_CHECK_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="higher-voronoi",
        description="Exact combinatorics of all order-k Voronoi diagrams of a planar point set.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random point set in general position")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--box", type=int, default=DEFAULT_BOX)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max redraws")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="compute the census and check every identity")
    p.add_argument("file", help="points file (or a JSON report written by analyze)")
    p.add_argument("--poset", action="store_true", help="include the poset section")
    p.add_argument("--json", help="write the JSON report here instead of stdout")
    p.add_argument("--hasse", help="write Hasse edges as '{1,2} < {1,2,4}' lines")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table", help="closed-form reduced f- and c-vectors")
    p.add_argument("--from", dest="n_from", type=int, default=3)
    p.add_argument("--to", dest="n_to", type=int, default=12)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="randomized identity campaign")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", type=int, default=DEFAULT_BOX)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
