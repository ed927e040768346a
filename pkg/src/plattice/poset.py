"""Finite posets given by their cover relation.

Elements are ``0..size-1``. Order relations are kept as Python-int bitsets,
which keeps the few-thousand-element lattices in this package cheap to
query. Isomorphism is decided by colour refinement on the Hasse diagram
followed by individualise-and-refine backtracking.
"""

from __future__ import annotations

from collections import Counter
from functools import cached_property
from typing import Iterator, Optional

from .errors import ResourceLimit

__all__ = ["FinitePoset", "boolean_lattice", "chain_poset", "is_isomorphic",
           "find_isomorphism", "is_self_dual", "is_distributive", "find_diamond",
           "iter_bits"]


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """Immutable finite poset described by upper covers."""

    def __init__(self, up_covers, labels: Optional[list] = None):
        self.up = [tuple(sorted(set(c))) for c in up_covers]
        self.size = len(self.up)
        down = [[] for _ in range(self.size)]
        for x, ys in enumerate(self.up):
            for y in ys:
                down[y].append(x)
        self.down = [tuple(d) for d in down]
        self.labels = labels

    def __len__(self):
        return self.size

    @cached_property
    def _topo(self) -> list:
        indeg = [len(d) for d in self.down]
        order = [x for x in range(self.size) if indeg[x] == 0]
        for x in order:
            for y in self.up[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    order.append(y)
        if len(order) != self.size:
            raise ValueError("cover relation has a cycle")
        return order

    @cached_property
    def down_masks(self) -> list:
        """``down_masks[x]`` has bit ``z`` set iff ``z <= x``."""
        masks = [0] * self.size
        for x in self._topo:
            m = 1 << x
            for z in self.down[x]:
                m |= masks[z]
            masks[x] = m
        return masks

    @cached_property
    def up_masks(self) -> list:
        masks = [0] * self.size
        for x in reversed(self._topo):
            m = 1 << x
            for z in self.up[x]:
                m |= masks[z]
            masks[x] = m
        return masks

    @cached_property
    def heights(self) -> list:
        """Length of the longest chain from a minimal element."""
        h = [0] * self.size
        for x in self._topo:
            for y in self.up[x]:
                h[y] = max(h[y], h[x] + 1)
        return h

    @cached_property
    def depths(self) -> list:
        d = [0] * self.size
        for x in reversed(self._topo):
            for y in self.down[x]:
                d[y] = max(d[y], d[x] + 1)
        return d

    def leq(self, x: int, y: int) -> bool:
        return bool(self.down_masks[y] >> x & 1)

    def minimal(self) -> list:
        return [x for x in range(self.size) if not self.down[x]]

    def maximal(self) -> list:
        return [x for x in range(self.size) if not self.up[x]]

    def is_graded(self) -> bool:
        return all(self.heights[y] == self.heights[x] + 1
                   for x in range(self.size) for y in self.up[x]) \
            and len({self.heights[x] for x in self.minimal()}) <= 1

    def level_profile(self) -> tuple:
        counts = Counter(self.heights)
        return tuple(counts[k] for k in range(max(self.heights, default=-1) + 1))

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.down, self.labels)

    def subposet(self, mask: int) -> "FinitePoset":
        """Induced subposet on a convex set (covers restrict unchanged)."""
        members = list(iter_bits(mask))
        pos = {x: i for i, x in enumerate(members)}
        up = [[pos[y] for y in self.up[x] if y in pos] for x in members]
        labels = None if self.labels is None else [self.labels[x] for x in members]
        return FinitePoset(up, labels)

    def interval_mask(self, x: int, y: int) -> int:
        return self.up_masks[x] & self.down_masks[y]

    # lattice operations -------------------------------------------------

    def join(self, x: int, y: int) -> Optional[int]:
        common = self.up_masks[x] & self.up_masks[y]
        for z in iter_bits(common):
            if self.up_masks[z] == common:
                return z
        return None

    def meet(self, x: int, y: int) -> Optional[int]:
        common = self.down_masks[x] & self.down_masks[y]
        for z in iter_bits(common):
            if self.down_masks[z] == common:
                return z
        return None

    # Möbius ---------------------------------------------------------------

    def mobius_from(self, x: int) -> dict:
        """``{y: mu(x, y)}`` for every ``y >= x`` via the zeta recursion."""
        mu = {x: 1}
        above = self.up_masks[x]
        for y in self._topo:
            if y == x or not above >> y & 1:
                continue
            strictly_below = self.down_masks[y] & above & ~(1 << y)
            mu[y] = -sum(mu[z] for z in iter_bits(strictly_below))
        return mu

    # chains ------------------------------------------------------------------

    def maximal_chains(self, x: int, y: int) -> Iterator[tuple]:
        """Saturated chains from ``x`` to ``y`` (DFS in cover order)."""
        below_y = self.down_masks[y]
        path = [x]

        def rec(z):
            if z == y:
                yield tuple(path)
                return
            for w in self.up[z]:
                if below_y >> w & 1:
                    path.append(w)
                    yield from rec(w)
                    path.pop()
        if self.leq(x, y):
            yield from rec(x)


def boolean_lattice(k: int) -> FinitePoset:
    return FinitePoset([[s | (1 << i) for i in range(k) if not s >> i & 1]
                        for s in range(1 << k)])


def chain_poset(k: int) -> FinitePoset:
    return FinitePoset([[i + 1] if i + 1 < k else [] for i in range(k)])


# isomorphism ---------------------------------------------------------------

def _refine(up, down, colours):
    """Colour refinement to a stable partition; colours are canonical ints."""
    n_classes = len(set(colours))
    while True:
        sigs = [(colours[v],
                 tuple(sorted(colours[w] for w in up[v])),
                 tuple(sorted(colours[w] for w in down[v])))
                for v in range(len(up))]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colours = [palette[s] for s in sigs]
        if len(palette) == n_classes:
            return colours
        n_classes = len(palette)


def find_isomorphism(a: FinitePoset, b: FinitePoset, *, max_nodes: int = 200000
                     ) -> Optional[list]:
    """Return ``f`` with ``x <= y`` in ``a`` iff ``f[x] <= f[y]`` in ``b``, or ``None``."""
    if a.size != b.size:
        return None
    if sum(map(len, a.up)) != sum(map(len, b.up)):
        return None
    if a.up == b.up:
        return list(range(a.size))
    n = a.size
    # work on the disjoint union so that colours are comparable across sides
    up = list(a.up) + [tuple(y + n for y in ys) for ys in b.up]
    down = list(a.down) + [tuple(y + n for y in ys) for ys in b.down]
    init_sigs = [(a.heights[v], a.depths[v], len(a.up[v]), len(a.down[v])) for v in range(n)]
    init_sigs += [(b.heights[v], b.depths[v], len(b.up[v]), len(b.down[v])) for v in range(n)]
    palette = {s: i for i, s in enumerate(sorted(set(init_sigs)))}
    colours = _refine(up, down, [palette[s] for s in init_sigs])
    budget = [max_nodes]

    def search(colours):
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceLimit("isomorphism search exceeded its node budget")
        left = Counter(colours[:n])
        if left != Counter(colours[n:]):
            return None
        cell = None
        for v in range(n):
            if left[colours[v]] > 1 and (cell is None or left[colours[v]] < left[colours[cell]]):
                cell = v
        if cell is None:
            where = {colours[n + v]: v for v in range(n)}
            mapping = [where[colours[v]] for v in range(n)]
            return mapping if _preserves_covers(a, b, mapping) else None
        target = colours[cell]
        fresh = max(colours) + 1
        for w in range(n, 2 * n):
            if colours[w] != target:
                continue
            trial = list(colours)
            trial[cell] = fresh
            trial[w] = fresh
            found = search(_refine(up, down, trial))
            if found is not None:
                return found
        return None

    return search(colours)


def _preserves_covers(a, b, mapping):
    for x in range(a.size):
        if tuple(sorted(mapping[y] for y in a.up[x])) != b.up[mapping[x]]:
            return False
    return True


def is_isomorphic(a: FinitePoset, b: FinitePoset) -> bool:
    return find_isomorphism(a, b) is not None


def is_self_dual(p: FinitePoset) -> bool:
    return is_isomorphic(p, p.dual())


def is_distributive(p: FinitePoset, *, max_size: int = 400) -> bool:
    """Check ``x ^ (y v z) = (x ^ y) v (x ^ z)`` for all triples of a lattice."""
    if p.size > max_size:
        raise ResourceLimit(f"distributivity check limited to {max_size} elements")
    n = p.size
    if n == 0:
        return True
    meet = [[p.meet(x, y) for y in range(n)] for x in range(n)]
    join = [[p.join(x, y) for y in range(n)] for x in range(n)]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
                    return False
    return True


def find_diamond(p: FinitePoset) -> Optional[tuple]:
    """A sublattice ``(bottom, x, y, z, top)`` shaped like ``M3``, if any."""
    n = p.size
    for x in range(n):
        for y in range(x + 1, n):
            if p.leq(x, y) or p.leq(y, x):
                continue
            lo, hi = p.meet(x, y), p.join(x, y)
            for z in range(y + 1, n):
                if p.leq(x, z) or p.leq(z, x) or p.leq(y, z) or p.leq(z, y):
                    continue
                if p.meet(x, z) == lo == p.meet(y, z) and p.join(x, z) == hi == p.join(y, z):
                    return (lo, x, y, z, hi)
    return None
