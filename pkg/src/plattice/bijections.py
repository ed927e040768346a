"""Bijections between complete chains, ordered forests and parking functions.

``phi``: chain -> ordered forest (relabel the top forest by the inverse
label word). ``psi``: chain -> parking function (shifted parent map composed
with the label word). ``weary`` composes ``psi`` with the inverse of ``phi``
but is computed directly from a priority search.
"""

from __future__ import annotations

from .core import (OrderedForest, Root, apply_relabeling, priority_forest_of,
                   priority_search)
from .errors import ContainsTop, InvalidStructure
from .lattice import Chain, chain_from_label_word, jordan_holder
from .parking import PartialParkingFunction, park, priority_forest_of_pf

__all__ = ["phi", "phi_inverse", "psi", "psi_inverse", "weary", "weary_inverse"]


def _check_complete(c: Chain):
    if c.contains_top:
        raise ContainsTop("bijections act on forest chains only")
    if c.bottom.rank != 0:
        raise InvalidStructure("a complete chain starts at the edgeless forest")


def phi(c: Chain) -> OrderedForest:
    _check_complete(c)
    return apply_relabeling(c.top, jordan_holder(c))


def phi_inverse(f: OrderedForest) -> Chain:
    p = priority_forest_of(f)
    return chain_from_label_word(p, priority_search(f).traversal.inverse())


def psi(c: Chain) -> PartialParkingFunction:
    _check_complete(c)
    lam = jordan_holder(c)
    top = c.top
    return PartialParkingFunction(top.n, tuple(top.s(v) for v in lam.word))


def psi_inverse(pf: PartialParkingFunction) -> Chain:
    p = priority_forest_of_pf(pf)
    return chain_from_label_word(p, park(pf).birds_eye.inverse())


def weary(f: OrderedForest) -> PartialParkingFunction:
    """Each car prefers the spot right after the visit of its parent.

    A child of root ``j`` prefers the entry point ``e_j``, which is one past
    the step at which that root is read.
    """
    res = priority_search(f)
    entry = f.entry_points()
    prefs = []
    for par in f.parent_of:
        if isinstance(par, Root):
            prefs.append(entry[par.index])
        else:
            prefs.append(res.visit_time[par] + 1)
    return PartialParkingFunction(f.n, tuple(prefs))


def weary_inverse(pf: PartialParkingFunction) -> OrderedForest:
    return phi(psi_inverse(pf))
