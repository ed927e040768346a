"""Oracle suites run by ``plattice verify``.

Each suite returns a list of :class:`Check` records; a suite passes when every
record does. The checks compare closed forms against exhaustive enumeration.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, NamedTuple

from . import bijections as bij
from .core import aggregate_diff, forest_statistics, ordered_forests, small_ascents
from .enumeration import (cayley_forest_count, characteristic_polynomial,
                          characteristic_polynomial_closed, mobius, mobius_oracle,
                          whitney_second_closed)
from .lattice import (TOP, build_lattice, complete_chains, is_boolean_over, leq,
                      verify_el_labeling)
from .parking import parking_functions, parking_statistics

__all__ = ["Check", "SUITES", "run_suite", "run_all", "format_report"]


class Check(NamedTuple):
    suite: str
    name: str
    passed: bool
    detail: str = ""


def graded(n: int) -> list:
    lat = build_lattice(n)
    poset = lat.poset
    out = [Check("graded", "poset is graded", poset.is_graded())]
    out.append(Check("graded", "level sizes match the composition count",
                     lat.level_sizes() == whitney_second_closed(n),
                     f"{lat.level_sizes()}"))
    lengths = {len(c) - 1 for c in poset.maximal_chains(0, lat.index(TOP))}
    out.append(Check("graded", "every maximal chain has length n+1",
                     lengths == {n + 1}, f"lengths {sorted(lengths)}"))
    return out


def el(n: int) -> list:
    lat = build_lattice(n)
    forests = [e for e in lat.elements if e is not TOP]
    bad, bad_af, intervals = [], [], 0
    for lo in forests:
        for hi in forests:
            if not leq(lo, hi):
                continue
            intervals += 1
            rep = verify_el_labeling(lat, lo, hi)
            if not rep.ok:
                bad.append((lo, hi))
            if rep.ascent_free != (1 if is_boolean_over(lo, hi) else 0):
                bad_af.append((lo, hi))
    return [
        Check("el", "unique increasing chain, lexicographically first", not bad,
              f"{intervals} intervals, {len(bad)} failures"),
        Check("el", "one ascent-free chain iff Boolean", not bad_af,
              f"{len(bad_af)} failures"),
    ]


def mobius_suite(n: int) -> list:
    lat = build_lattice(n)
    els = lat.elements
    mismatches, pairs = 0, 0
    for i, x in enumerate(els):
        mu = lat.poset.mobius_from(i)
        for j, v in mu.items():
            pairs += 1
            if mobius(x, els[j]) != v:
                mismatches += 1
    out = [Check("mobius", "closed form equals zeta recursion", mismatches == 0,
                 f"{pairs} pairs, {mismatches} mismatches")]
    chi = characteristic_polynomial(lat)
    out.append(Check("mobius", "characteristic polynomial closed form",
                     chi == characteristic_polynomial_closed(n), str(chi)))
    if n >= 1:
        out.append(Check("mobius", "mu(bottom, top) = 0", mobius_oracle(lat, lat.bottom, TOP) == 0))
    return out


def bijections_suite(n: int) -> list:
    out = []
    for m in range(n + 1):
        chains = list(complete_chains(n, m))
        forests = list(ordered_forests(n, m))
        pfs = list(parking_functions(m, n))
        want = cayley_forest_count(n, m)
        out.append(Check("bijections", f"counts m={m}",
                         len(chains) == len(forests) == len(pfs) == want,
                         f"{len(chains)} / {len(forests)} / {len(pfs)} vs {want}"))
        ok = all(bij.phi_inverse(bij.phi(c)) == c and bij.psi_inverse(bij.psi(c)) == c
                 for c in chains)
        ok = ok and all(bij.phi(bij.phi_inverse(f)) == f
                        and bij.weary(f) == bij.psi(bij.phi_inverse(f))
                        and bij.weary_inverse(bij.weary(f)) == f for f in forests)
        ok = ok and all(bij.psi(bij.psi_inverse(pf)) == pf for pf in pfs)
        out.append(Check("bijections", f"roundtrips m={m}", ok))
    return out


def equidistribution(n: int) -> list:
    out = []
    for m in range(n + 1):
        left = Counter()
        for f in ordered_forests(n, m):
            st = forest_statistics(f)
            left[(tuple(sorted(st.records)), st.psa, st.wait)] += 1
        right = Counter()
        for pf in parking_functions(m, n):
            st = parking_statistics(pf)
            right[(tuple(sorted(st.records)), st.lucky, st.probes)] += 1
        out.append(Check("equidistribution", f"(Rec, psa, wait) ~ (Rec, lucky, probes) m={m}",
                         left == right, f"{sum(left.values())} objects"))
    same = True
    for m in range(n + 1):
        for c in complete_chains(n, m):
            st = forest_statistics(bij.phi(c))
            same = same and st.psa == small_ascents(c.top) and st.wait == aggregate_diff(c.top)
    out.append(Check("equidistribution", "psa = small ascents, wait = aggregate diff", same))
    return out


SUITES: dict = {
    "graded": graded,
    "el": el,
    "mobius": mobius_suite,
    "bijections": bijections_suite,
    "equidistribution": equidistribution,
}


def run_suite(name: str, n: int) -> list:
    fn: Callable = SUITES[name]
    return fn(n)


def run_all(n: int) -> list:
    return [c for name in SUITES for c in run_suite(name, n)]


def format_report(checks) -> str:
    lines = [f"{'PASS' if c.passed else 'FAIL'} [{c.suite}] {c.name}"
             + (f" ({c.detail})" if c.detail else "") for c in checks]
    failed = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines)
