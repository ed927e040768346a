"""Enumerative invariants of the priority lattice and their brute-force checks.

All arithmetic is on Python integers. Each closed form here has a companion
that recomputes the same quantity from a materialised :class:`Lattice`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator

from .core import PriorityForest, small_ascents
from .errors import NotAbove, NotComparable, PlatticeError, ResourceLimit
from .lattice import (TOP, Lattice, build_lattice, enumerate_chains,
                      is_boolean_over, leq)
from .poset import is_isomorphic, iter_bits

__all__ = [
    "Polynomial", "cayley_forest_count", "whitney_second", "whitney_second_closed",
    "corank_gf_coefficients", "mobius", "mobius_oracle", "upper_mobius",
    "p_boolean_forests_above", "involution_upper", "characteristic_polynomial",
    "characteristic_polynomial_closed", "whitney_first", "hook_poset_parent",
    "hook_lengths", "chain_count_hook", "subset_to_composition",
    "composition_to_subset", "flag_vectors", "flag_f_vector_from_chains",
    "ideal_census_gamma", "filter_census_theta", "census_members",
]


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial in ``q``; ``coeffs[k]`` multiplies ``q**k``."""

    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def q_power_times_shifted(cls, a: int, b: int) -> "Polynomial":
        """``q**a * (q - 1)**b``."""
        return cls((0,) * a + tuple(comb(b, k) * (-1) ** (b - k) for k in range(b + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q):
        return sum(c * q ** k for k, c in enumerate(self.coeffs))

    def __add__(self, other):
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])


def cayley_forest_count(n: int, m: int) -> int:
    """``(n - m + 1)(n + 1)^(m - 1)``, exact (equal to 1 when ``m = 0``)."""
    if m == 0:
        return 1
    return (n - m + 1) * (n + 1) ** (m - 1)


# Whitney numbers of the second kind ------------------------------------------

def whitney_second(n: int) -> tuple:
    """Level sizes of ``Pi(n)``, counted on the built lattice."""
    return build_lattice(n).level_sizes()


def whitney_second_closed(n: int) -> tuple:
    """Level sizes from interval compositions: a block of size ``t`` holds ``(t-1)!`` trees."""
    # ways[c][s]: sequences of c increasing trees on s nodes in total
    total = n + 1
    ways = [[0] * (total + 1) for _ in range(total + 1)]
    ways[0][0] = 1
    for c in range(1, total + 1):
        for s in range(1, total + 1):
            ways[c][s] = sum(factorial(t - 1) * ways[c - 1][s - t] for t in range(1, s + 1))
    return tuple(ways[total - k][total] for k in range(n + 1)) + (1,)


def corank_gf_coefficients(max_n: int) -> list:
    """Rows ``n = 0..max_n``; ``row[k]`` is the coefficient of ``z^(n+1) t^k``.

    Expands ``1 / (1 - t P(z)) + z / (1 - z)`` with ``P(z) = sum (j-1)! z^j``
    as a power series in ``z`` whose coefficients are polynomials in ``t``.
    """
    order = max_n + 1
    # series[N] is a list of t-coefficients
    series = [[1]]
    for N in range(1, order + 1):
        acc = [0] * (N + 1)
        for j in range(1, N + 1):
            w = factorial(j - 1)
            for k, c in enumerate(series[N - j]):
                acc[k + 1] += w * c
        series.append(acc)
    rows = []
    for n in range(max_n + 1):
        row = list(series[n + 1])
        row[0] += 1  # z/(1-z): the top of each lattice
        rows.append(row)
    return rows


# Möbius function -----------------------------------------------------------

def upper_mobius(p: PriorityForest) -> int:
    """``mu(P, TOP)``: -1 on trees, else ``(-1)^corank * prod_{k<l} e(T_k)``."""
    if p.is_tree:
        return -1
    prod = 1
    for e in p.component_edge_counts()[:-1]:
        prod *= e
    return (-1) ** p.corank * prod


def mobius(x, y) -> int:
    """Closed-form Möbius value of a comparable pair."""
    if x is TOP:
        if y is TOP:
            return 1
        raise NotComparable("TOP lies above every forest")
    if y is TOP:
        return upper_mobius(x)
    if not leq(x, y):
        raise NotComparable(f"{x} is not below {y}")
    if is_boolean_over(x, y):
        return (-1) ** (y.rank - x.rank)
    return 0


def mobius_oracle(lattice: Lattice, x, y) -> int:
    """Möbius value by the recursion ``sum_{x <= z <= y} mu(x, z) = 0``."""
    if not lattice.leq(x, y):
        raise NotComparable(f"{x} is not below {y}")
    return lattice.poset.mobius_from(lattice.index(x))[lattice.index(y)]


def p_boolean_forests_above(p: PriorityForest) -> Iterator[PriorityForest]:
    """Forests ``Q >= P`` all of whose extra edges are removable.

    Each root ``r_k`` (``k >= 1``) of ``P`` is either left alone or hung
    from a vertex of the tree immediately to its left.
    """
    comps = p.components()
    options = [[None] + list(comps[k - 1]) for k in range(1, len(comps))]
    for choice in itertools.product(*options):
        parent = list(p.parent)
        for k, q in enumerate(choice, 1):
            parent[comps[k].start - 1] = q
        yield PriorityForest(p.n, tuple(parent))


def involution_upper(p: PriorityForest, q: PriorityForest) -> PriorityForest:
    """Sign-reversing involution on ``P``-Boolean forests above ``P``.

    Find the first root ``r_k`` of ``P`` (``k >= 1``) that is unattached in
    ``Q`` or attached to ``r_{k-1}``, and toggle that edge. Fixed points are
    the trees hanging every ``r_k`` from a non-root of ``T_{k-1}``.
    """
    if q is TOP or not leq(p, q):
        raise NotAbove(f"{q} is not a forest above {p}")
    if not is_boolean_over(p, q):
        raise NotAbove(f"{q} is not {p}-Boolean")
    roots = p.roots
    for k in range(1, len(roots)):
        r, prev = roots[k], roots[k - 1]
        cur = q.p(r)
        if cur is None:
            return q.with_parent(r, prev)
        if cur == prev:
            return q.with_parent(r, None)
    return q


# characteristic polynomial -------------------------------------------------

def _ideal_mobius(lattice: Lattice, top) -> list:
    mu = lattice.poset.mobius_from(0)
    t = lattice.index(top)
    below = lattice.poset.down_masks[t]
    return [(lattice.elements[i], mu[i]) for i in iter_bits(below)]


def characteristic_polynomial(lattice: Lattice, top=TOP) -> Polynomial:
    """``sum_{x <= top} mu(0, x) q^(rank(top) - rank(x))`` on the built lattice."""
    r = lattice.rank(top)
    coeffs = [0] * (r + 1)
    for x, m in _ideal_mobius(lattice, top):
        coeffs[r - lattice.rank(x)] += m
    return Polynomial(tuple(coeffs))


def characteristic_polynomial_closed(n: int, top=TOP) -> Polynomial:
    if top is TOP:
        if n == 0:
            return Polynomial((-1, 1))
        return Polynomial.q_power_times_shifted(1, n)
    a = small_ascents(top)
    return Polynomial.q_power_times_shifted(top.rank - a, a)


def whitney_first(lattice: Lattice, top=TOP) -> tuple:
    """``w_k``: sum of ``mu(0, x)`` over elements ``x <= top`` of rank ``k``."""
    r = lattice.rank(top)
    w = [0] * (r + 1)
    for x, m in _ideal_mobius(lattice, top):
        w[lattice.rank(x)] += m
    return tuple(w)


# hook lengths ---------------------------------------------------------------

def hook_poset_parent(p: PriorityForest) -> dict:
    """For each non-root ``i``: the least non-root ``j > i`` with ``s(j) <= i``, or ``None``."""
    V = p.non_roots
    out = {}
    for i in V:
        out[i] = next((j for j in V if j > i and p.s(j) <= i), None)
    return out


def hook_lengths(p: PriorityForest) -> dict:
    """Subtree sizes in the decreasing forest defined by :func:`hook_poset_parent`."""
    par = hook_poset_parent(p)
    h = {v: 1 for v in par}
    for v in sorted(par):  # children are smaller than their parents
        if par[v] is not None:
            h[par[v]] += h[v]
    return h


def chain_count_hook(p: PriorityForest) -> int:
    prod = 1
    for v in hook_lengths(p).values():
        prod *= v
    q, r = divmod(factorial(p.rank), prod)
    if r:
        raise PlatticeError(f"{p.rank}! is not divisible by the hook product {prod}")
    return q


# flag vectors -------------------------------------------------------------

def subset_to_composition(S, n: int) -> tuple:
    """``{s_1 < ... < s_k}`` in ``[n]`` -> ``(s_1, s_2 - s_1, ..., n + 1 - s_k)``."""
    pts = [0] + sorted(S) + [n + 1]
    return tuple(b - a for a, b in zip(pts, pts[1:]))


def composition_to_subset(comp) -> frozenset:
    return frozenset(itertools.accumulate(comp[:-1]))


def _rank_subsets(n: int):
    for k in range(n + 1):
        yield from itertools.combinations(range(1, n + 1), k)


def flag_vectors(lattice: Lattice, max_n: int = 6) -> tuple:
    """Flag f-vector ``alpha`` and flag h-vector ``beta``, keyed by compositions of ``n + 1``."""
    n = lattice.n
    if n > max_n:
        raise ResourceLimit(f"flag vectors limited to n <= {max_n}")
    levels = [[] for _ in range(n + 2)]
    for i, e in enumerate(lattice.elements):
        levels[lattice.rank(e)].append(i)
    down = lattice.poset.down_masks
    alpha = {}
    for S in _rank_subsets(n):
        counts = {0: 1}
        for r in list(S) + [n + 1]:
            new = {}
            for y in levels[r]:
                new[y] = sum(c for x, c in counts.items() if down[y] >> x & 1)
            counts = new
        alpha[frozenset(S)] = sum(counts.values())
    beta = {}
    for S in _rank_subsets(n):
        total = 0
        for k in range(len(S) + 1):
            for T in itertools.combinations(S, k):
                total += (-1) ** (len(S) - k) * alpha[frozenset(T)]
        beta[frozenset(S)] = total
    key = lambda S: subset_to_composition(S, n)
    return ({key(S): v for S, v in alpha.items()}, {key(S): v for S, v in beta.items()})


def flag_f_vector_from_chains(lattice: Lattice) -> dict:
    """Flag f-vector by listing every chain from bottom to top."""
    n = lattice.n
    alpha = {subset_to_composition(S, n): 0 for S in _rank_subsets(n)}
    for c in enumerate_chains(lattice, lattice.bottom, TOP, saturated_only=False):
        S = [lattice.rank(e) for e in c.elements[1:-1]]
        alpha[subset_to_composition(S, n)] += 1
    return alpha


# censuses -------------------------------------------------------------------

def census_members(n: int, kind: str) -> list:
    """Elements whose principal ideal (``kind='gamma'``) or filter (``'theta'``)
    is isomorphic to some ``Pi(m)``, ``0 <= m <= n``, paired with that ``m``.

    Ideals are taken for every element, TOP included; filters for forests.
    """
    if kind not in ("gamma", "theta"):
        raise ValueError("kind must be 'gamma' or 'theta'")
    lat = build_lattice(n)
    refs: dict = {}
    for m in range(n + 1):
        ref = build_lattice(m).poset
        refs.setdefault((ref.size, ref.level_profile()), []).append((m, ref))
    out = []
    for x in lat.elements:
        if kind == "theta" and x is TOP:
            continue
        sub = lat.ideal(x) if kind == "gamma" else lat.filter(x)
        for m, ref in refs.get((sub.size, sub.level_profile()), ()):
            if is_isomorphic(sub, ref):
                out.append((x, m))
                break
    return out


def ideal_census_gamma(n: int) -> int:
    return len(census_members(n, "gamma"))


def filter_census_theta(n: int) -> int:
    return len(census_members(n, "theta"))
