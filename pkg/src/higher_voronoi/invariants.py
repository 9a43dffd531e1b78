"""Census of all order-k diagrams with every counting identity checked.

Each vector is computed along two independent routes where possible:

* f by deciding every subset's region, and from the c-vector;
* e by cutting bisectors at circumcenters, and from Euler's relation;
* v from the circle census, and from f and the unbounded count;
* f_inf by line separability, and from f and v.

All comparisons are exact integer equalities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple

from .bisectors import e_vector
from .circles import c_at, c_vector, v_vector_from_circles
from .exact_geom import GeneralPositionError, SiteSet, validate_general_position
from .poset import euler_from_f
from .regions import DEFAULT_MAX_N, nonempty_regions
from .unbounded import f_inf_vector

CHECK_NAMES = (
    "EULER_PER_ORDER",
    "TOTALS",
    "VK_EXPR",
    "EK_EXPR",
    "FK_EXPR",
    "CV",
    "DUAL",
    "TOTAL_UNBOUNDED",
    "F_SYM",
    "V_SYM",
    "C_SYM",
    "FINF_C",
    "C_DET_F",
    "TILDE_LINK",
    "CHI",
    "ALT_V",
    "CROSS_PATH",
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    observed: Any
    expected: Any

    @property
    def family(self) -> str:
        """Identity name without the bracketed variant, e.g. TOTALS for TOTALS[e]."""
        return self.name.split("[", 1)[0]

    def mismatches(self) -> List[Tuple[int, Any, Any]]:
        """(position, observed, expected) for every disagreeing entry."""
        if isinstance(self.observed, list):
            return [
                (i, o, e)
                for i, (o, e) in enumerate(zip(self.observed, self.expected))
                if o != e
            ] + (
                [(-1, len(self.observed), len(self.expected))]
                if len(self.observed) != len(self.expected)
                else []
            )
        return [] if self.passed else [(0, self.observed, self.expected)]


def _check(name: str, observed, expected) -> CheckResult:
    return CheckResult(name, observed == expected, observed, expected)


def reduced_f(f: List[int]) -> List[int]:
    """Entry j is f_{j+1} + f_{n-j}; the self-paired middle (odd n) appears once."""
    n = len(f)
    return [f[j] + f[n - 1 - j] for j in range((n + 1) // 2)]


def reduced_c(c: List[int]) -> List[int]:
    """Entry i is c_i + c_{n-i-3}."""
    n = len(c) + 2
    return [c[i] + c[n - 3 - i] for i in range((n - 1) // 2)]


def closed_reduced_f(n: int) -> List[int]:
    return [2 * (j + 1) * (n - j) + 1 - n for j in range((n + 1) // 2)]


def closed_reduced_c(n: int) -> List[int]:
    return [2 * (i + 1) * (n - 2 - i) for i in range((n - 1) // 2)]


def closed_form_table(n_min: int, n_max: int) -> List[Tuple[int, List[int], List[int]]]:
    if not 3 <= n_min <= n_max:
        raise ValueError("need 3 <= n_min <= n_max")
    return [(n, closed_reduced_f(n), closed_reduced_c(n)) for n in range(n_min, n_max + 1)]


def format_table_row(n: int, rf: List[int], rc: List[int]) -> str:
    return f"{n} | ({', '.join(map(str, rf))}) | ({', '.join(map(str, rc))})"


def central_values(n: int) -> Tuple[str, int, int]:
    """The value pinned at the self-paired index: ("f", k, f_k) for odd n,
    ("v", k, v_k) for even n."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if n % 2:
        k = (n + 1) // 2
        return ("f", k, k * n - k * k + 1)
    k = n // 2
    return ("v", k, n * n // 2 - n)


@dataclass
class CensusReport:
    n: int
    c: List[int]
    f_enumerated: List[int]
    f_from_c: List[int]
    v_from_circles: List[int]
    v_from_euler: List[int]
    e_direct: List[int]
    e_from_euler: List[int]
    f_inf_separability: List[int]
    f_inf_from_euler: List[int]
    reduced_f: List[int]
    reduced_c: List[int]
    chi: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return all(ch.passed for ch in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [ch for ch in self.checks if not ch.passed]

    def check(self, name: str) -> CheckResult:
        for ch in self.checks:
            if ch.name == name:
                return ch
        raise KeyError(name)

    def families(self) -> dict:
        """Identity name -> True iff every variant of it passed."""
        out: dict = {}
        for ch in self.checks:
            out[ch.family] = out.get(ch.family, True) and ch.passed
        return out


def run_checks(r: CensusReport) -> List[CheckResult]:
    n = r.n
    f, c, e = r.f_enumerated, r.c, r.e_direct
    v, v_eu = r.v_from_circles, r.v_from_euler
    finf = r.f_inf_separability
    ks = range(1, n + 1)

    def fk(k):
        return f[k - 1]

    def vk(vec, k):
        return vec[k - 1] if 1 <= k <= n else 0

    checks = []
    live = [k for k in ks if fk(k) >= 1]
    checks.append(_check(
        "EULER_PER_ORDER",
        [v[k - 1] - e[k - 1] + fk(k) for k in live],
        [1] * len(live),
    ))
    checks.append(_check("TOTALS[v]", sum(v_eu), n * (n - 1) * (n - 2) // 3))
    checks.append(_check("TOTALS[e]", sum(e), n * (n - 1) ** 2 // 2))
    checks.append(_check("TOTALS[f]", sum(f), n * (n * n + 5) // 6))
    checks.append(_check(
        "VK_EXPR", list(v), [2 * (fk(k) - 1) - finf[k] for k in ks]))
    checks.append(_check(
        "EK_EXPR", list(e), [3 * (fk(k) - 1) - finf[k] for k in ks]))
    checks.append(_check(
        "FK_EXPR",
        list(f),
        [(2 * k - 1) * n - (k * k - 1) - sum(finf[i - 1] for i in range(1, k + 1)) for k in ks],
    ))
    checks.append(_check("CV", list(v_eu), [c_at(c, k - 1) + c_at(c, k - 2) for k in ks]))
    checks.append(_check(
        "DUAL", [finf[k] for k in range(1, n)], [finf[n - k] for k in range(1, n)]))
    checks.append(_check("TOTAL_UNBOUNDED", sum(finf[i - 1] for i in ks), n * (n - 1)))
    checks.append(_check(
        "F_SYM",
        [fk(k) + fk(n - k + 1) for k in ks],
        [2 * k * (n - k + 1) + 1 - n for k in ks],
    ))
    checks.append(_check(
        "V_SYM",
        [vk(v_eu, k) + vk(v_eu, n - k) for k in range(1, n)],
        [4 * k * (n - k) - 2 * n for k in range(1, n)],
    ))
    checks.append(_check(
        "C_SYM",
        [c[i] + c[n - i - 3] for i in range(n - 2)],
        [2 * (i + 1) * (n - 2 - i) for i in range(n - 2)],
    ))
    checks.append(_check(
        "FINF_C",
        [finf[i] + c_at(c, i - 1) - c_at(c, i - 2) for i in range(1, n)],
        [2 * (n - i) for i in range(1, n)],
    ))
    checks.append(_check("C_DET_F", list(f), [n - k + 1 + c_at(c, k - 2) for k in ks]))
    rf, rc = r.reduced_f, r.reduced_c
    checks.append(_check("TILDE_LINK", list(rf), [n + 1] + [x + n + 1 for x in rc]))
    checks.append(_check("REDUCED_F", list(rf), closed_reduced_f(n)))
    checks.append(_check("REDUCED_C", list(rc), closed_reduced_c(n)))
    if n % 2:
        checks.append(_check("CHI", r.chi, 0))
    else:
        # n = 0 mod 4: odd; n = 2 mod 4: even
        checks.append(_check("CHI", r.chi % 2, 1 if n % 4 == 0 else 0))
    checks.append(_check(
        "ALT_V", sum((-1) ** (k + 1) * v_eu[k - 1] for k in range(1, n)), 0))
    kind, k, value = central_values(n)
    checks.append(_check(f"CENTRAL[{kind}{k}]", fk(k) if kind == "f" else v_eu[k - 1], value))
    checks.append(_check("CROSS_PATH[f]", list(f), list(r.f_from_c)))
    checks.append(_check("CROSS_PATH[e]", list(e), list(r.e_from_euler)))
    checks.append(_check("CROSS_PATH[v]", list(v), list(v_eu)))
    checks.append(_check("CROSS_PATH[f_inf]", list(finf), list(r.f_inf_from_euler)))
    return checks


def check_all(
    sites: SiteSet,
    max_n: int = DEFAULT_MAX_N,
    regions: Optional[List[List[frozenset]]] = None,
) -> CensusReport:
    """Compute every census vector of ``sites`` and evaluate all identities.

    Raises GeneralPositionError before computing anything if the sites are
    degenerate. ``regions`` may pass in an already computed
    :func:`nonempty_regions` result.
    """
    violation = validate_general_position(sites)
    if violation is not None:
        raise GeneralPositionError(violation)
    n = sites.n
    if regions is None:
        regions = nonempty_regions(sites, max_n)
    f = [len(regions[k]) for k in range(1, n + 1)]
    c = c_vector(sites)
    v = v_vector_from_circles(c)
    e = e_vector(sites)
    finf = f_inf_vector(sites)

    report = CensusReport(
        n=n,
        c=c,
        f_enumerated=f,
        f_from_c=[n - k + 1 + c_at(c, k - 2) for k in range(1, n + 1)],
        v_from_circles=v,
        v_from_euler=[2 * (f[k - 1] - 1) - finf[k] for k in range(1, n + 1)],
        e_direct=e,
        e_from_euler=[v[k - 1] + f[k - 1] - 1 for k in range(1, n + 1)],
        f_inf_separability=finf,
        f_inf_from_euler=[0] + [2 * (f[k - 1] - 1) - v[k - 1] for k in range(1, n + 1)],
        reduced_f=reduced_f(f),
        reduced_c=reduced_c(c),
        chi=euler_from_f(f).chi,
    )
    report.checks = run_checks(report)
    return report
