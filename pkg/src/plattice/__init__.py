"""Priority lattices of increasing forests, ordered forests and parking functions."""

from .core import (OrderedForest, PartialPermutation, PriorityForest, Root,
                   apply_relabeling, forest_statistics, invert, ordered_forests,
                   priority_forest_of, priority_forests, priority_search,
                   records_of_partial_permutation)
from .errors import (ContainsTop, DomainMismatch, EdgeNotInDifference, InvalidLabelWord,
                     InvalidStructure, NotAbove, NotACover, NotAParkingFunction,
                     NotComparable, NotSaturated, PlatticeError, ResourceLimit)
from .lattice import (TOP, Chain, Lattice, build_lattice, chain_from_label_word,
                      classify_edge, complete_chains, edge_label, enumerate_chains,
                      jordan_holder, verify_el_labeling)
from .parking import (PartialParkingFunction, park, parking_functions,
                      parking_statistics, priority_forest_of_pf)
from .bijections import phi, phi_inverse, psi, psi_inverse, weary, weary_inverse
from .enumeration import (Polynomial, cayley_forest_count, chain_count_hook,
                          characteristic_polynomial, corank_gf_coefficients,
                          filter_census_theta, flag_vectors, hook_lengths,
                          ideal_census_gamma, involution_upper, mobius, mobius_oracle,
                          whitney_first, whitney_second, whitney_second_closed)
from .poset import FinitePoset, find_diamond, is_distributive, is_isomorphic, is_self_dual

__version__ = "0.1.0"
