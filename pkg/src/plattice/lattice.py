"""The priority lattice: priority forests on ``[0, n]`` plus a formal top.

Forests are ordered by edge containment. Everything that only concerns
forests (order, covers, labels, chains inside forest intervals) is computed
structurally; :class:`Lattice` materialises the whole poset when order
theory over all elements is needed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .core import PartialPermutation, PriorityForest, priority_forests
from .errors import (ContainsTop, EdgeNotInDifference, InvalidLabelWord,
                     InvalidStructure, NotACover, NotSaturated, ResourceLimit,
                     DomainMismatch)
from .poset import FinitePoset, iter_bits

__all__ = [
    "TOP", "Top", "LatticeElement", "Chain", "Lattice", "ELReport",
    "build_lattice", "max_n_cap", "leq", "meet", "join", "edge_label",
    "jordan_holder", "chain_from_label_word", "forest_interval_chains",
    "complete_chains", "enumerate_chains", "classify_edge", "is_boolean_over",
    "verify_el_labeling", "REMOVABLE", "ASCENT",
]

DEFAULT_MAX_N = 7


class Top:
    """The formal top element; a singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TOP"

    def __reduce__(self):
        return (Top, ())


TOP = Top()
LatticeElement = Union[PriorityForest, Top]


def max_n_cap() -> int:
    return int(os.environ.get("PLATTICE_MAX_N", DEFAULT_MAX_N))


# order --------------------------------------------------------------------

def leq(x: LatticeElement, y: LatticeElement) -> bool:
    if y is TOP:
        return True
    if x is TOP:
        return False
    if x.n != y.n:
        raise DomainMismatch("elements come from different lattices")
    return all(a is None or a == b for a, b in zip(x.parent, y.parent))


def _largest_priority_subforest(parent: list) -> tuple:
    # an edge q -> i survives only if every vertex strictly between q and i keeps its edge
    keep = list(parent)
    changed = True
    while changed:
        changed = False
        for i, q in enumerate(keep, 1):
            if q is not None and any(keep[v - 1] is None for v in range(q + 1, i)):
                keep[i - 1] = None
                changed = True
    return tuple(keep)


def meet(x: LatticeElement, y: LatticeElement) -> LatticeElement:
    """Greatest lower bound.

    For forests this is the largest priority forest inside ``E(x) & E(y)``;
    the plain intersection can break the interval condition (for instance
    ``x = P(0,0,0)``, ``y = P(0,1,0)`` on ``[0, 3]``).
    """
    if x is TOP:
        return y
    if y is TOP:
        return x
    common = [a if a == b else None for a, b in zip(x.parent, y.parent)]
    return PriorityForest(x.n, _largest_priority_subforest(common))


def join(x: LatticeElement, y: LatticeElement) -> LatticeElement:
    """Least upper bound: the edge union when no vertex gets two parents, else TOP."""
    if x is TOP or y is TOP:
        return TOP
    parent = []
    for a, b in zip(x.parent, y.parent):
        if a is not None and b is not None and a != b:
            return TOP
        parent.append(a if a is not None else b)
    return PriorityForest(x.n, tuple(parent))


def edge_label(x: LatticeElement, y: LatticeElement) -> Optional[int]:
    """Child vertex of the edge added by the cover ``x < y``; ``None`` into TOP."""
    if x is TOP:
        raise NotACover("TOP covers nothing above it")
    if y is TOP:
        if not x.is_tree:
            raise NotACover("only priority trees are covered by TOP")
        return None
    if not leq(x, y) or y.rank != x.rank + 1:
        raise NotACover(f"{x} is not covered by {y}")
    (label,) = [i for i, (a, b) in enumerate(zip(x.parent, y.parent), 1) if a != b]
    return label


@dataclass(frozen=True)
class Chain:
    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))

    def __len__(self):
        return len(self.elements) - 1

    def __iter__(self):
        return iter(self.elements)

    @property
    def bottom(self):
        return self.elements[0]

    @property
    def top(self):
        return self.elements[-1]

    @property
    def contains_top(self) -> bool:
        return any(e is TOP for e in self.elements)

    def labels(self) -> tuple:
        return tuple(edge_label(a, b) for a, b in zip(self.elements, self.elements[1:]))


def jordan_holder(c: Chain) -> PartialPermutation:
    if c.contains_top:
        raise ContainsTop("Jordan-Hölder words are defined on forest chains only")
    word = []
    for a, b in zip(c.elements, c.elements[1:]):
        try:
            word.append(edge_label(a, b))
        except NotACover as exc:
            raise NotSaturated(str(exc)) from None
    n = c.bottom.n
    return PartialPermutation(len(word), n, tuple(word))


def chain_from_label_word(p: PriorityForest, lam: PartialPermutation) -> Chain:
    """The chain ``0 < P_1 < ... < P_m = p`` adding the edge above ``lam(i)`` at step ``i``."""
    if lam.codomain_size != p.n or len(lam.domain) != lam.domain_size \
            or set(lam.word) != set(p.non_roots):
        raise DomainMismatch("label word must be a bijection onto the non-roots of p")
    parent = [None] * p.n
    out = [PriorityForest.edgeless(p.n)]
    for v in lam.word:
        parent[v - 1] = p.p(v)
        try:
            out.append(PriorityForest(p.n, tuple(parent)))
        except InvalidStructure as exc:
            raise InvalidLabelWord(f"{lam} is not a Jordan-Hölder word of [0, {p}]: {exc}") from None
    return Chain(tuple(out))


def forest_interval_chains(lower: PriorityForest, upper: PriorityForest) -> Iterator[Chain]:
    """Maximal chains of ``[lower, upper]`` in lexicographic order of label words."""
    if not leq(lower, upper):
        return
    todo = [i for i in range(1, upper.n + 1)
            if lower.parent[i - 1] is None and upper.parent[i - 1] is not None]
    path = [lower]

    def rec(current, remaining):
        if not remaining:
            yield Chain(tuple(path))
            return
        for v in remaining:
            parent = list(current.parent)
            parent[v - 1] = upper.parent[v - 1]
            if PriorityForest.is_valid(parent):
                nxt = PriorityForest(current.n, tuple(parent))
                path.append(nxt)
                yield from rec(nxt, [w for w in remaining if w != v])
                path.pop()
    yield from rec(lower, todo)


def complete_chains(n: int, m: int) -> Iterator[Chain]:
    """Saturated chains of length ``m`` starting at the edgeless forest."""
    bottom = PriorityForest.edgeless(n)
    for p in sorted(priority_forests(n, rank=m), key=PriorityForest.key):
        yield from forest_interval_chains(bottom, p)


REMOVABLE = "removable"
ASCENT = "ascent"


def classify_edge(lower: PriorityForest, upper: PriorityForest, edge) -> str:
    """Whether deleting ``edge`` (a ``(parent, child)`` pair) from ``upper`` leaves a priority forest."""
    q, v = edge
    if not leq(lower, upper) or upper.p(v) != q or lower.p(v) == q:
        raise EdgeNotInDifference(f"{edge} is not in E({upper}) minus E({lower})")
    parent = list(upper.parent)
    parent[v - 1] = None
    return REMOVABLE if PriorityForest.is_valid(parent) else ASCENT


def is_boolean_over(lower: PriorityForest, upper: PriorityForest) -> bool:
    """True iff every edge of ``upper`` outside ``lower`` is removable."""
    return all(classify_edge(lower, upper, e) == REMOVABLE
               for e in upper.edges - lower.edges)


# materialised lattice -------------------------------------------------------

class Lattice:
    """All of ``Pi(n)`` with its cover relation.

    Elements are sorted by rank, then by parent tuple, with TOP last.
    """

    def __init__(self, n: int):
        self.n = n
        forests = sorted(priority_forests(n), key=lambda f: (f.rank, f.key()))
        self.elements = forests + [TOP]
        self._index = {e: i for i, e in enumerate(self.elements)}
        up = [[] for _ in self.elements]
        top_i = len(self.elements) - 1
        for i, f in enumerate(forests):
            if f.is_tree:
                up[i].append(top_i)
                continue
            comps = f.components()
            for j in range(1, len(comps)):
                r = comps[j].start
                for q in comps[j - 1]:
                    up[i].append(self._index[f.with_parent(r, q)])
        self.poset = FinitePoset(up, labels=self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def index(self, x: LatticeElement) -> int:
        return self._index[x]

    @property
    def bottom(self) -> PriorityForest:
        return self.elements[0]

    @property
    def top(self) -> Top:
        return TOP

    def rank(self, x: LatticeElement) -> int:
        return self.n + 1 if x is TOP else x.rank

    def levels(self) -> list:
        out = [[] for _ in range(self.n + 2)]
        for e in self.elements:
            out[self.rank(e)].append(e)
        return out

    def level_sizes(self) -> tuple:
        return tuple(len(level) for level in self.levels())

    def atoms(self) -> list:
        return self.levels()[1] if self.n else [TOP]

    def coatoms(self) -> list:
        return self.levels()[self.n]

    def covers_up(self, x: LatticeElement) -> list:
        return [self.elements[j] for j in self.poset.up[self.index(x)]]

    def covers_down(self, x: LatticeElement) -> list:
        return [self.elements[j] for j in self.poset.down[self.index(x)]]

    def covers(self) -> Iterator[tuple]:
        for i, ys in enumerate(self.poset.up):
            for j in ys:
                yield self.elements[i], self.elements[j]

    def leq(self, x, y) -> bool:
        return self.poset.leq(self.index(x), self.index(y))

    def meet(self, x, y) -> LatticeElement:
        return meet(x, y)

    def join(self, x, y) -> LatticeElement:
        return join(x, y)

    def interval_elements(self, x, y) -> list:
        mask = self.poset.interval_mask(self.index(x), self.index(y))
        return [self.elements[i] for i in iter_bits(mask)]

    def interval(self, x, y) -> FinitePoset:
        return self.poset.subposet(self.poset.interval_mask(self.index(x), self.index(y)))

    def ideal(self, x) -> FinitePoset:
        return self.interval(self.bottom, x)

    def filter(self, x) -> FinitePoset:
        return self.interval(x, TOP)


_CACHE: dict = {}


def build_lattice(n: int, max_n: Optional[int] = None) -> Lattice:
    """Materialise ``Pi(n)``; refuses ``n`` above the cap (env ``PLATTICE_MAX_N``, default 7)."""
    if n < 0:
        raise InvalidStructure("n must be non-negative")
    cap = max_n_cap() if max_n is None else max_n
    if n > cap:
        raise ResourceLimit(f"n={n} exceeds the lattice size cap {cap}")
    if n not in _CACHE:
        _CACHE[n] = Lattice(n)
    return _CACHE[n]


def _sorted_covers(lattice: Lattice, i: int) -> list:
    def key(j):
        lab = edge_label(lattice.elements[i], lattice.elements[j])
        return (lab is None, lab or 0, j)
    return sorted(lattice.poset.up[i], key=key)


def enumerate_chains(lattice: Lattice, bottom, top, saturated_only: bool = True) -> Iterator[Chain]:
    """Chains from ``bottom`` to ``top``.

    With ``saturated_only`` the maximal chains of the interval are produced in
    lexicographic order of their label words; otherwise every chain
    ``bottom = t_0 < ... < t_k = top`` is produced, in element order.
    """
    b, t = lattice.index(bottom), lattice.index(top)
    if not lattice.poset.leq(b, t):
        return
    below_t = lattice.poset.down_masks[t]
    els = lattice.elements
    path = [b]

    if saturated_only:
        def rec(z):
            if z == t:
                yield Chain(tuple(els[i] for i in path))
                return
            for w in _sorted_covers(lattice, z):
                if below_t >> w & 1:
                    path.append(w)
                    yield from rec(w)
                    path.pop()
    else:
        up_masks = lattice.poset.up_masks

        def rec(z):
            if z == t:
                yield Chain(tuple(els[i] for i in path))
                return
            for w in iter_bits(up_masks[z] & below_t & ~(1 << z)):
                path.append(w)
                yield from rec(w)
                path.pop()
    yield from rec(b)


@dataclass(frozen=True)
class ELReport:
    lower: object
    upper: object
    chains: int
    increasing: int
    increasing_is_first: bool
    ascent_free: int

    @property
    def ok(self) -> bool:
        return self.increasing == 1 and self.increasing_is_first


def verify_el_labeling(lattice: Optional[Lattice], lower: PriorityForest,
                       upper: PriorityForest) -> ELReport:
    """Count increasing and ascent-free maximal chains of a forest interval."""
    if lattice is not None:
        chains = list(enumerate_chains(lattice, lower, upper))
    else:
        chains = list(forest_interval_chains(lower, upper))
    words = [c.labels() for c in chains]
    incr = [w for w in words if all(a < b for a, b in zip(w, w[1:]))]
    ascent_free = sum(1 for w in words if all(a > b for a, b in zip(w, w[1:])))
    first = min(words) if words else None
    return ELReport(lower, upper, len(words), len(incr),
                    bool(incr) and incr[0] == first, ascent_free)
