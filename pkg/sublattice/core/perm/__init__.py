"""Permutations, stabilizer chains and the element index."""

from sublattice.core.perm.chain import ChainLevel, StabilizerChain, schreier_sims
from sublattice.core.perm.group import (
    PermGroup,
    build_stabilizer_chain,
    centralizer,
    conjugacy_classes_elements,
    conjugating_element,
    contains,
    coset_representatives,
    derived_subgroup,
    group_order,
    is_normal,
    is_solvable,
    normalizer,
)
from sublattice.core.perm.index import ElementIndex
from sublattice.core.perm.permutation import Permutation

__all__ = [
    "ChainLevel",
    "ElementIndex",
    "PermGroup",
    "Permutation",
    "StabilizerChain",
    "build_stabilizer_chain",
    "centralizer",
    "conjugacy_classes_elements",
    "conjugating_element",
    "contains",
    "coset_representatives",
    "derived_subgroup",
    "group_order",
    "is_normal",
    "is_solvable",
    "normalizer",
    "schreier_sims",
]
