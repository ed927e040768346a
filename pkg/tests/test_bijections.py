from collections import Counter

import pytest
from hypothesis import given, settings

from plattice.bijections import phi, phi_inverse, psi, psi_inverse, weary, weary_inverse
from plattice.core import (OrderedForest, PartialPermutation, PriorityForest, Root,
                           apply_relabeling, forest_statistics, ordered_forests,
                           priority_forest_of, priority_search)
from plattice.errors import ContainsTop, InvalidStructure, NotAParkingFunction
from plattice.lattice import (TOP, Chain, build_lattice, chain_from_label_word,
                              complete_chains, enumerate_chains, jordan_holder)
from plattice.parking import (PartialParkingFunction, park, parking_functions,
                              parking_statistics)

from strategies import ordered_forests_st, preference_lists_st

PF = PartialParkingFunction
SIZES = [(n, m) for n in range(5) for m in range(n + 1)]


def increasing_chain(p):
    return chain_from_label_word(p, PartialPermutation(p.rank, p.n, p.non_roots))


# phi -------------------------------------------------------------------------

def test_phi_of_increasing_chain_is_identity_labelling():
    p = PriorityForest(4, (0, 1, None, 3))
    f = phi(increasing_chain(p))
    assert f == apply_relabeling(p, PartialPermutation(p.rank, 4, p.non_roots))
    assert priority_search(f).traversal.word == (1, 2, None, 3)


def test_trees_of_pi3_split_by_chains():
    lat = build_lattice(3)
    for t in lat.coatoms():
        images = [phi(c) for c in enumerate_chains(lat, lat.bottom, t)]
        assert len(set(images)) == len(images)
        assert all(priority_forest_of(f) == t for f in images)
    assert sorted(len(list(enumerate_chains(lat, lat.bottom, t))) for t in lat.coatoms()) \
        == [1, 1, 2, 3, 3, 6]


@pytest.mark.parametrize("n,m", SIZES)
def test_phi_is_a_bijection(n, m):
    images = [phi(c) for c in complete_chains(n, m)]
    assert len(set(images)) == len(images)
    assert set(images) == set(ordered_forests(n, m))


@pytest.mark.parametrize("n,m", SIZES)
def test_phi_roundtrips(n, m):
    for c in complete_chains(n, m):
        assert phi_inverse(phi(c)) == c
    for f in ordered_forests(n, m):
        assert phi(phi_inverse(f)) == f


def test_phi_inverse_small_cases():
    one = OrderedForest(3, 1, (Root(1),))
    c = phi_inverse(one)
    assert len(c) == 1 and c.top == PriorityForest(3, (None, 1, None))
    empty = OrderedForest(2, 0, ())
    assert phi_inverse(empty) == Chain((PriorityForest.edgeless(2),))


def test_phi_rejects_top_and_bad_bottom():
    b, t = PriorityForest.edgeless(1), PriorityForest.path(1)
    with pytest.raises(ContainsTop):
        phi(Chain((b, t, TOP)))
    with pytest.raises(InvalidStructure):
        phi(Chain((t,)))


# psi -------------------------------------------------------------------------

@pytest.mark.parametrize("n", range(5))
def test_psi_of_increasing_path_chain(n):
    assert psi(increasing_chain(PriorityForest.path(n))).prefs == tuple(range(1, n + 1))


def test_psi_empty_chain():
    assert psi(Chain((PriorityForest.edgeless(3),))) == PF(3, ())


@pytest.mark.parametrize("n,m", SIZES)
def test_psi_roundtrips_and_birds_eye(n, m):
    images = set()
    for c in complete_chains(n, m):
        pf = psi(c)
        images.add(pf)
        assert park(pf).birds_eye == jordan_holder(c).inverse()
        assert psi_inverse(pf) == c
    assert images == set(parking_functions(m, n))
    for pf in parking_functions(m, n):
        assert psi(psi_inverse(pf)) == pf


def test_psi_inverse_of_example():
    c = psi_inverse(PF(5, (2, 4, 2, 1, 3)))
    assert len(c) == 5
    assert c.top == PriorityForest(5, (0, 1, 1, 3, 2))
    assert jordan_holder(c).word == (2, 4, 3, 1, 5)


def test_psi_inverse_rejects_failure():
    with pytest.raises(NotAParkingFunction):
        psi_inverse(PF(2, (2, 2)))


# weary -----------------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 6))
def test_weary_of_path(n):
    path = OrderedForest(n, n, (Root(0),) + tuple(range(1, n)))
    assert weary(path).prefs == tuple(range(1, n + 1))


def test_weary_entry_point():
    assert weary(OrderedForest(2, 1, (Root(1),))).prefs == (2,)


@pytest.mark.parametrize("n,m", SIZES)
def test_weary_factorises(n, m):
    images = set()
    for f in ordered_forests(n, m):
        pf = weary(f)
        images.add(pf)
        assert pf == psi(phi_inverse(f))
        assert weary_inverse(pf) == f
    assert images == set(parking_functions(m, n))


@pytest.mark.parametrize("n,m", SIZES)
def test_weary_preserves_statistics(n, m):
    for f in ordered_forests(n, m):
        pf = weary(f)
        fs, ps = forest_statistics(f), parking_statistics(pf)
        assert (fs.psa, fs.wait, fs.records) == (ps.lucky, ps.probes, ps.records)
        assert priority_search(f).traversal.inversions() == park(pf).birds_eye.inversions()


@pytest.mark.parametrize("n,m", SIZES)
def test_children_counts_match_preference_multiplicities(n, m):
    for f in ordered_forests(n, m):
        kids = Counter(len(v) for v in f.children().values())
        prefs = Counter(weary(f).prefs)
        mult = Counter(prefs[s] for s in range(n + 1))
        assert kids == mult


@given(ordered_forests_st(max_n=7))
@settings(max_examples=200, deadline=None)
def test_roundtrips_on_larger_forests(f):
    c = phi_inverse(f)
    assert phi(c) == f
    assert weary(f) == psi(c)
    assert psi_inverse(weary(f)) == c


@given(preference_lists_st(max_n=7))
@settings(max_examples=200, deadline=None)
def test_weary_inverse_on_random_preferences(pf):
    if pf.is_parking_function():
        assert weary(weary_inverse(pf)) == pf
    else:
        with pytest.raises(NotAParkingFunction):
            weary_inverse(pf)
