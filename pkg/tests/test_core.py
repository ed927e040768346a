import itertools
from collections import Counter

import pytest
from hypothesis import given, settings

from plattice.core import (OrderedForest, PartialPermutation, PriorityForest, Root,
                           aggregate_diff, apply_relabeling, forest_statistics, invert,
                           ordered_forests, priority_forest_of, priority_forests,
                           priority_search, records_of_partial_permutation,
                           small_ascents)
from plattice.enumeration import cayley_forest_count, chain_count_hook
from plattice.errors import DomainMismatch, InvalidStructure

from strategies import (brute_priority_forests, components_are_intervals,
                        ordered_forests_st, partial_permutations_st,
                        priority_forests_st, simulate_search)

W = PartialPermutation.from_string


# partial permutations --------------------------------------------------------

def test_invert_traversal_example():
    w = W("- - 4 1 3 - - 2", 4)
    inv = invert(w)
    assert (inv.domain_size, inv.codomain_size) == (4, 8)
    assert inv.word == (4, 8, 5, 3)


def test_invert_identity_and_empty():
    assert invert(PartialPermutation.identity(3)) == PartialPermutation.identity(3)
    empty = PartialPermutation(5, 5, (None,) * 5)
    assert invert(empty) == empty


@pytest.mark.parametrize("text,expected", [
    ("2 - 1 4 3", {1, 2, 4}),
    ("1 2 3", {1, 2, 3}),
    ("3 2 1", {3}),
])
def test_records(text, expected):
    assert records_of_partial_permutation(W(text)) == expected


@pytest.mark.parametrize("word", [(1, 1), (0,), (3,)])
def test_partial_permutation_rejects(word):
    with pytest.raises(InvalidStructure):
        PartialPermutation(len(word), 2, word)


def test_from_string_accepts_unicode_minus():
    assert W("− 2 1").word == (None, 2, 1)


@given(partial_permutations_st())
def test_invert_is_involution(p):
    assert invert(invert(p)) == p
    for i, v in p.as_dict().items():
        assert invert(p)(v) == i


@given(partial_permutations_st())
def test_records_ignore_trailing_undefined(p):
    padded = PartialPermutation(p.domain_size + 2, p.codomain_size, p.word + (None, None))
    assert padded.records() == p.records()


# ordered forests -------------------------------------------------------------

def test_ordered_forest_validation():
    with pytest.raises(InvalidStructure):
        OrderedForest(2, 2, (2, 1))  # cycle
    with pytest.raises(InvalidStructure):
        OrderedForest(2, 1, (Root(2),))
    with pytest.raises(InvalidStructure):
        OrderedForest(1, 2, (Root(0), 1))


@pytest.mark.parametrize("n,m", [(n, m) for n in range(5) for m in range(n + 1)])
def test_ordered_forest_count_is_cayley(n, m):
    assert sum(1 for _ in ordered_forests(n, m)) == cayley_forest_count(n, m)


def test_entry_points():
    f = OrderedForest(2, 1, (Root(1),))
    assert f.tree_sizes() == [1, 2]
    assert f.entry_points() == [1, 2]


# priority forests ------------------------------------------------------------

def test_priority_forest_validation():
    assert PriorityForest.is_valid((0, 1, 1, 3, 2))
    assert not PriorityForest.is_valid((0, None, 0))  # 3 hangs from 0 across the root 2
    with pytest.raises(InvalidStructure):
        PriorityForest(2, (1, None))


@pytest.mark.parametrize("n", range(7))
def test_enumeration_matches_brute_force(n):
    fast = sorted(p.key() for p in priority_forests(n))
    assert len(fast) == len(set(fast))
    assert fast == sorted(p.key() for p in brute_priority_forests(n))


@given(priority_forests_st())
def test_generated_forests_are_intervals(p):
    assert components_are_intervals(p.n, p.parent)
    assert p.rank + p.corank == p.n + 1
    assert p.rank == len(p.non_roots)
    assert all(1 <= p.s(i) <= i for i in p.non_roots)


# priority search ---------------------------------------------------------------

def test_search_small_cases():
    assert priority_search(OrderedForest(1, 1, (Root(0),))).traversal.word == (1,)
    assert priority_search(OrderedForest(2, 0, ())).traversal.word == (None, None)


def test_priority_forest_of_examples():
    path = OrderedForest(2, 2, (Root(0), 1))
    assert priority_forest_of(path).parent == (0, 1)
    second_tree = OrderedForest(2, 1, (Root(1),))
    assert priority_forest_of(second_tree).parent == (None, 1)


@given(ordered_forests_st())
@settings(max_examples=300)
def test_search_matches_set_simulation(f):
    res = priority_search(f)
    assert list(res.traversal.word) == simulate_search(f)
    assert res.traversal.word.count(None) == f.n - f.m


@pytest.mark.parametrize("n", range(5))
def test_relabel_by_visit_order_gives_identity_pattern(n):
    for m in range(n + 1):
        for f in ordered_forests(n, m):
            p = priority_forest_of(f)
            lam = PartialPermutation(m, n, tuple(p.non_roots))
            g = apply_relabeling(p, lam)
            assert list(priority_search(g).traversal.inverse().word) == list(p.non_roots)


def test_apply_relabeling_example():
    path = PriorityForest.path(2)
    f = apply_relabeling(path, W("2 1"))
    assert f.parent_of == (2, Root(0))
    assert priority_search(f).traversal.word == (2, 1)
    with pytest.raises(DomainMismatch):
        apply_relabeling(PriorityForest(2, (0, None)), W("1 2"))


@pytest.mark.parametrize("n", range(5))
def test_apply_relabeling_inverts_priority_forest_of(n):
    for m in range(n + 1):
        for f in ordered_forests(n, m):
            p = priority_forest_of(f)
            assert apply_relabeling(p, priority_search(f).traversal.inverse()) == f


@pytest.mark.parametrize("n", range(5))
def test_fiber_sizes_follow_hook_formula(n):
    fibers = Counter(priority_forest_of(f) for m in range(n + 1) for f in ordered_forests(n, m))
    for p in priority_forests(n):
        assert fibers[p] == chain_count_hook(p)
    by_rank = Counter()
    for p, c in fibers.items():
        by_rank[p.rank] += c
    assert all(by_rank[m] == cayley_forest_count(n, m) for m in range(n + 1))


# statistics ------------------------------------------------------------------

def test_statistics_path_and_star():
    path = OrderedForest(3, 3, (Root(0), 1, 2))
    st = forest_statistics(path)
    assert (st.psa, st.wait, set(st.records)) == (3, 3, {1, 2, 3})
    star = OrderedForest(3, 3, (Root(0),) * 3)
    st = forest_statistics(star)
    assert (st.psa, st.wait, set(st.records)) == (1, 6, {1, 2, 3})


@pytest.mark.parametrize("n", [3, 5])
def test_small_ascents_and_diff(n):
    path = PriorityForest.path(n)
    assert (small_ascents(path), aggregate_diff(path)) == (n, n)
    star = PriorityForest(n, (0,) * n)
    assert (small_ascents(star), aggregate_diff(star)) == (1, n * (n + 1) // 2)
    edgeless = PriorityForest.edgeless(n)
    assert (small_ascents(edgeless), aggregate_diff(edgeless)) == (0, 0)


@given(ordered_forests_st())
@settings(max_examples=300)
def test_statistics_transfer_to_priority_forest(f):
    st = forest_statistics(f)
    p = priority_forest_of(f)
    assert st.psa == small_ascents(p)
    assert st.wait == aggregate_diff(p)
    assert st.records == priority_search(f).traversal.records()
    assert aggregate_diff(p) >= p.rank >= small_ascents(p)


def test_records_equal_traversal_records_exhaustive():
    for n in range(5):
        for m in range(n + 1):
            for f in ordered_forests(n, m):
                assert f.records() == priority_search(f).traversal.records()


def test_brute_ordered_forest_enumeration_is_exhaustive():
    # every parent assignment that validates is produced exactly once
    n, m = 3, 2
    targets = [Root(r) for r in range(n - m + 1)] + list(range(1, m + 1))
    valid = set()
    for combo in itertools.product(targets, repeat=m):
        try:
            valid.add(OrderedForest(n, m, combo))
        except InvalidStructure:
            pass
    listed = list(ordered_forests(n, m))
    assert len(listed) == len(set(listed)) == len(valid)
