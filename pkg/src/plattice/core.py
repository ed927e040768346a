"""Partial permutations, ordered forests, priority forests and priority search.

Conventions used throughout the package:

* ``[n] = {1, ..., n}`` and ``[n]_0 = {0, ..., n}``.
* A partial permutation is stored as its one-line word; ``None`` marks a
  position outside the domain.
* Ordered forests keep their roots apart from the labels: the parent of a
  label is either another label (an ``int``) or a :class:`Root`.
* Priority forests store ``parent[i - 1]`` for vertex ``i``; vertex 0 is
  always a root and has no entry.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence, Union

from .errors import DomainMismatch, InvalidStructure

__all__ = [
    "PartialPermutation", "Root", "OrderedForest", "PriorityForest",
    "SearchResult", "ForestStatistics",
    "invert", "records_of_partial_permutation", "priority_search",
    "priority_forest_of", "apply_relabeling", "forest_statistics",
    "small_ascents", "aggregate_diff", "priority_forests", "ordered_forests",
    "increasing_trees",
]

_UNDEFINED_TOKENS = {"-", "−", "_", "."}


@dataclass(frozen=True)
class PartialPermutation:
    """An injective partial map ``[domain_size] -> [codomain_size]``."""

    domain_size: int
    codomain_size: int
    word: tuple

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if self.domain_size < 0 or self.codomain_size < 0:
            raise InvalidStructure("sizes must be non-negative")
        if len(word) != self.domain_size:
            raise InvalidStructure(
                f"word has length {len(word)}, expected {self.domain_size}")
        seen = set()
        for v in word:
            if v is None:
                continue
            if not isinstance(v, int) or not 1 <= v <= self.codomain_size:
                raise InvalidStructure(f"value {v!r} outside [1, {self.codomain_size}]")
            if v in seen:
                raise InvalidStructure(f"value {v} repeated; map is not injective")
            seen.add(v)

    @classmethod
    def from_string(cls, text: str, codomain_size: Optional[int] = None):
        """Parse a word such as ``"- - 4 1 3 - - 2"``."""
        word = []
        for tok in text.split():
            word.append(None if tok in _UNDEFINED_TOKENS else int(tok))
        if codomain_size is None:
            codomain_size = max((v for v in word if v is not None), default=0)
        return cls(len(word), codomain_size, tuple(word))

    @classmethod
    def from_mapping(cls, mapping: dict, domain_size: int, codomain_size: int):
        word = [None] * domain_size
        for i, v in mapping.items():
            word[i - 1] = v
        return cls(domain_size, codomain_size, tuple(word))

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, tuple(range(1, n + 1)))

    def __call__(self, i: int) -> Optional[int]:
        return self.word[i - 1]

    def __str__(self):
        return " ".join("-" if v is None else str(v) for v in self.word)

    @property
    def domain(self) -> tuple:
        return tuple(i for i, v in enumerate(self.word, 1) if v is not None)

    @property
    def image(self) -> frozenset:
        return frozenset(v for v in self.word if v is not None)

    def as_dict(self) -> dict:
        return {i: v for i, v in enumerate(self.word, 1) if v is not None}

    def inverse(self) -> "PartialPermutation":
        word = [None] * self.codomain_size
        for i, v in enumerate(self.word, 1):
            if v is not None:
                word[v - 1] = i
        return PartialPermutation(self.codomain_size, self.domain_size, tuple(word))

    def inversions(self) -> int:
        """Pairs of defined positions ``i < j`` with ``w(i) > w(j)``."""
        vals = [v for v in self.word if v is not None]
        return sum(1 for a in range(len(vals)) for b in range(a + 1, len(vals))
                   if vals[a] > vals[b])

    def records(self) -> frozenset:
        """Left-to-right maxima of every maximal run of defined letters."""
        out = set()
        best = None
        for v in self.word:
            if v is None:
                best = None
            elif best is None or v > best:
                out.add(v)
                best = v
        return frozenset(out)


def invert(p: PartialPermutation) -> PartialPermutation:
    return p.inverse()


def records_of_partial_permutation(p: PartialPermutation) -> frozenset:
    return p.records()


@dataclass(frozen=True, order=True)
class Root:
    """Root ``index`` of an ordered forest (``Root(0)`` is the first root)."""

    index: int

    def __repr__(self):
        return f"Root({self.index})"


Parent = Union[int, Root]


@dataclass(frozen=True)
class OrderedForest:
    """Rooted forest on ``n + 1`` nodes with ``m`` labelled non-roots.

    ``parent_of[k - 1]`` is the parent of label ``k``: another label or a
    :class:`Root` with index in ``[0, n - m]``.
    """

    n: int
    m: int
    parent_of: tuple

    def __post_init__(self):
        parent_of = tuple(self.parent_of)
        object.__setattr__(self, "parent_of", parent_of)
        n, m = self.n, self.m
        if not 0 <= m <= n:
            raise InvalidStructure(f"need 0 <= m <= n, got m={m}, n={n}")
        if len(parent_of) != m:
            raise InvalidStructure(f"expected {m} parent entries, got {len(parent_of)}")
        for k, par in enumerate(parent_of, 1):
            if isinstance(par, Root):
                if not 0 <= par.index <= n - m:
                    raise InvalidStructure(f"root index {par.index} outside [0, {n - m}]")
            elif isinstance(par, int):
                if not 1 <= par <= m or par == k:
                    raise InvalidStructure(f"label {k} has invalid parent label {par}")
            else:
                raise InvalidStructure(f"bad parent entry {par!r}")
        # acyclicity: every label must reach a root
        state = [0] * (m + 1)  # 0 unknown, 1 on stack, 2 reaches a root
        for k in range(1, m + 1):
            path = []
            cur = k
            while isinstance(cur, int) and state[cur] == 0:
                state[cur] = 1
                path.append(cur)
                cur = parent_of[cur - 1]
            if isinstance(cur, int) and state[cur] == 1:
                raise InvalidStructure(f"cycle through label {cur}")
            for v in path:
                state[v] = 2

    @property
    def num_roots(self) -> int:
        return self.n - self.m + 1

    def children(self) -> dict:
        """Map each label and each :class:`Root` to its sorted child labels."""
        out = {Root(r): [] for r in range(self.num_roots)}
        for k in range(1, self.m + 1):
            out[k] = []
        for k, par in enumerate(self.parent_of, 1):
            out[par].append(k)
        return out

    def root_of(self, k: int) -> Root:
        cur = k
        while isinstance(cur, int):
            cur = self.parent_of[cur - 1]
        return cur

    def tree_sizes(self) -> list:
        """``t_j``: number of nodes of tree ``j``, root included."""
        sizes = [1] * self.num_roots
        for k in range(1, self.m + 1):
            sizes[self.root_of(k).index] += 1
        return sizes

    def entry_points(self) -> list:
        """``e_j = 1 + t_0 + ... + t_{j-1}``."""
        out, acc = [], 1
        for t in self.tree_sizes():
            out.append(acc)
            acc += t
        return out

    def records(self) -> frozenset:
        """Labels that are the largest along their path from the root."""
        out = set()
        for k in range(1, self.m + 1):
            cur = self.parent_of[k - 1]
            while isinstance(cur, int) and cur < k:
                cur = self.parent_of[cur - 1]
            if not isinstance(cur, int):
                out.add(k)
        return frozenset(out)


@dataclass(frozen=True)
class PriorityForest:
    """Increasing forest on ``[0, n]`` whose trees occupy integer intervals."""

    n: int
    parent: tuple

    def __post_init__(self):
        parent = tuple(self.parent)
        object.__setattr__(self, "parent", parent)
        if self.n < 0:
            raise InvalidStructure("n must be non-negative")
        if len(parent) != self.n:
            raise InvalidStructure(f"expected {self.n} parent entries, got {len(parent)}")
        problem = _priority_violation(parent)
        if problem:
            raise InvalidStructure(problem)

    @classmethod
    def edgeless(cls, n: int) -> "PriorityForest":
        return cls(n, (None,) * n)

    @classmethod
    def path(cls, n: int) -> "PriorityForest":
        return cls(n, tuple(range(n)))

    @classmethod
    def from_edges(cls, n: int, edges) -> "PriorityForest":
        parent = [None] * n
        for a, b in edges:
            p, c = min(a, b), max(a, b)
            if parent[c - 1] is not None:
                raise InvalidStructure(f"vertex {c} receives two parents")
            parent[c - 1] = p
        return cls(n, tuple(parent))

    @staticmethod
    def is_valid(parent: Sequence) -> bool:
        return _priority_violation(tuple(parent)) is None

    def p(self, i: int) -> Optional[int]:
        """Parent of vertex ``i`` (``None`` for roots)."""
        return None if i == 0 else self.parent[i - 1]

    def s(self, i: int) -> Optional[int]:
        """Shifted parent map ``p(i) + 1``."""
        q = self.p(i)
        return None if q is None else q + 1

    @property
    def edges(self) -> frozenset:
        return frozenset((q, i) for i, q in enumerate(self.parent, 1) if q is not None)

    @property
    def rank(self) -> int:
        return sum(1 for q in self.parent if q is not None)

    @property
    def corank(self) -> int:
        return self.n + 1 - self.rank

    @property
    def roots(self) -> tuple:
        return (0,) + tuple(i for i, q in enumerate(self.parent, 1) if q is None)

    @property
    def non_roots(self) -> tuple:
        return tuple(i for i, q in enumerate(self.parent, 1) if q is not None)

    @property
    def is_tree(self) -> bool:
        return self.rank == self.n

    def components(self) -> list:
        """Vertex intervals of the component trees, as ``range`` objects."""
        roots = self.roots + (self.n + 1,)
        return [range(roots[j], roots[j + 1]) for j in range(len(roots) - 1)]

    def component_edge_counts(self) -> list:
        return [len(c) - 1 for c in self.components()]

    def children(self, v: int) -> list:
        return [i for i, q in enumerate(self.parent, 1) if q == v]

    def with_parent(self, i: int, q: Optional[int]) -> "PriorityForest":
        parent = list(self.parent)
        parent[i - 1] = q
        return PriorityForest(self.n, tuple(parent))

    def key(self) -> tuple:
        return tuple(-1 if q is None else q for q in self.parent)

    def __str__(self):
        return "P(" + ",".join("-" if q is None else str(q) for q in self.parent) + ")"


def _priority_violation(parent: tuple) -> Optional[str]:
    current_root = 0
    for i, q in enumerate(parent, 1):
        if q is None:
            current_root = i
            continue
        if not isinstance(q, int) or q < 0 or q >= i:
            return f"vertex {i} has non-increasing parent {q!r}"
        if q < current_root:
            return f"vertex {i} attaches to {q} across root {current_root}"
    return None


class SearchResult(NamedTuple):
    traversal: PartialPermutation
    visit_time: dict    # label -> step
    root_time: dict     # root index -> step (root 0 at step 0)


def priority_search(f: OrderedForest) -> SearchResult:
    """Visit the smallest unblocked label; finish each tree before the next root."""
    kids = f.children()
    word = []
    visit_time, root_time = {}, {0: 0}
    step = 0
    for r in range(f.num_roots):
        if r:
            step += 1
            word.append(None)
            root_time[r] = step
        heap = list(kids[Root(r)])
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            step += 1
            word.append(k)
            visit_time[k] = step
            for c in kids[k]:
                heapq.heappush(heap, c)
    return SearchResult(PartialPermutation(f.n, f.m, tuple(word)), visit_time, root_time)


def _time_of(par: Parent, res: SearchResult) -> int:
    return res.root_time[par.index] if isinstance(par, Root) else res.visit_time[par]


def priority_forest_of(f: OrderedForest) -> PriorityForest:
    """Relabel ``f`` by visit time (first root becomes vertex 0)."""
    res = priority_search(f)
    parent = [None] * f.n
    for k, par in enumerate(f.parent_of, 1):
        parent[res.visit_time[k] - 1] = _time_of(par, res)
    return PriorityForest(f.n, tuple(parent))


def apply_relabeling(p: PriorityForest, lam: PartialPermutation) -> OrderedForest:
    """Give non-root vertex ``v`` of ``p`` the label ``lam^{-1}(v)``.

    Roots of ``p`` become root indices in increasing vertex order. When
    ``lam`` is a Jordan-Hölder word of ``[0, p]`` the result has priority
    forest ``p`` and priority traversal ``lam^{-1}``.
    """
    non_roots = p.non_roots
    if lam.domain_size != len(non_roots) or lam.codomain_size != p.n \
            or set(lam.word) != set(non_roots):
        raise DomainMismatch("label word image must equal the non-root vertices")
    label_of = {v: k for k, v in enumerate(lam.word, 1)}
    root_index = {r: j for j, r in enumerate(p.roots)}
    parent_of = []
    for k, v in enumerate(lam.word, 1):
        q = p.p(v)
        parent_of.append(Root(root_index[q]) if q in root_index else label_of[q])
    return OrderedForest(p.n, len(non_roots), tuple(parent_of))


@dataclass(frozen=True)
class ForestStatistics:
    psa: int
    wait: int
    records: frozenset
    waiting_times: tuple = ()


def forest_statistics(f: OrderedForest) -> ForestStatistics:
    """Priority small ascents, total waiting time and forest records.

    Waiting times are counted by direct simulation: at every step each
    unblocked, not-yet-visited label (the one visited at that step included)
    accrues one unit.
    """
    kids = f.children()
    waiting = [0] * (f.m + 1)
    for r in range(f.num_roots):
        # the step that reads root r finds nothing else unblocked
        heap = list(kids[Root(r)])
        heapq.heapify(heap)
        while heap:
            for k in heap:
                waiting[k] += 1
            k = heapq.heappop(heap)
            for c in kids[k]:
                heapq.heappush(heap, c)
    w = tuple(waiting[1:])
    return ForestStatistics(
        psa=sum(1 for t in w if t == 1), wait=sum(w), records=f.records(), waiting_times=w)


def small_ascents(p: PriorityForest) -> int:
    return sum(1 for i in p.non_roots if p.p(i) == i - 1)


def aggregate_diff(p: PriorityForest) -> int:
    return sum(i - p.s(i) + 1 for i in p.non_roots)


def increasing_trees(lo: int, hi: int) -> Iterator[tuple]:
    """Parent tuples ``(p(lo+1), ..., p(hi))`` of increasing trees on ``[lo, hi]``."""
    if hi == lo:
        yield ()
        return
    for rest in increasing_trees(lo, hi - 1):
        for q in range(lo, hi):
            yield rest + (q,)


def _compositions(total: int) -> Iterator[tuple]:
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def priority_forests(n: int, rank: Optional[int] = None) -> Iterator[PriorityForest]:
    """All priority forests on ``[0, n]``, built tree by tree over interval blocks."""
    for comp in _compositions(n + 1):
        if rank is not None and n + 1 - len(comp) != rank:
            continue
        blocks = []
        start = 0
        for size in comp:
            blocks.append((start, start + size - 1))
            start += size
        yield from _forests_over_blocks(n, blocks)


def _forests_over_blocks(n, blocks):
    def rec(j):
        if j == len(blocks):
            yield ()
            return
        lo, hi = blocks[j]
        head = () if lo == 0 else (None,)
        for tree in increasing_trees(lo, hi):
            for rest in rec(j + 1):
                yield head + tree + rest
    for parent in rec(0):
        yield PriorityForest(n, parent)


def ordered_forests(n: int, m: int) -> Iterator[OrderedForest]:
    """All ordered ``(m, n)``-forests, by brute force over parent assignments."""
    import itertools

    choices = [Root(r) for r in range(n - m + 1)]
    for assignment in itertools.product(range(len(choices) + m), repeat=m):
        parent_of = []
        for k, a in enumerate(assignment, 1):
            if a < len(choices):
                parent_of.append(choices[a])
            else:
                lab = a - len(choices) + 1
                if lab == k:
                    break
                parent_of.append(lab)
        else:
            try:
                yield OrderedForest(n, m, tuple(parent_of))
            except InvalidStructure:
                continue
