"""Conjugation racks, their subrack lattices, and the topology of derived posets."""

from .constructions import alternating, dihedral, named_group, quaternion, symmetric
from .errors import (CapExceededError, HypothesisError, InvariantViolation, MalformedInputError,
                     NotALatticeError, NotClosedError, RacklabError)
from .groups import Permutation, PermGroup, conjugacy_classes, find_class, sylow_p_subgroups
from .lattice import enumerate_subrack_lattice, inf_poset
from .poset import Poset
from .racks import FiniteRack, class_rack, conjugation_rack, group_rack, p_power_rack
from .theorems import RackStudy, Verdict
from .topology import SimplicialComplex, betti_numbers, order_complex

__version__ = "0.1.0"

__all__ = [
    "alternating", "dihedral", "named_group", "quaternion", "symmetric",
    "CapExceededError", "HypothesisError", "InvariantViolation", "MalformedInputError",
    "NotALatticeError", "NotClosedError", "RacklabError",
    "Permutation", "PermGroup", "conjugacy_classes", "find_class", "sylow_p_subgroups",
    "enumerate_subrack_lattice", "inf_poset", "Poset",
    "FiniteRack", "class_rack", "conjugation_rack", "group_rack", "p_power_rack",
    "RackStudy", "Verdict", "SimplicialComplex", "betti_numbers", "order_complex",
]
