"""Subgroup classes by cyclic extension, with the zuppo machinery and an oracle."""

from sublattice.core.subgroups.classes import (
    SubgroupClass,
    element_order_profile,
    is_conjugate_subgroups,
    sort_classes,
    total_subgroups,
)
from sublattice.core.subgroups.cyclic_extension import (
    cyclic_extension_step,
    lattice_cyclic_extension,
    sylow_subgroup,
)
from sublattice.core.subgroups.filters import LatticeFilter, SubgroupPredicate, registry
from sublattice.core.subgroups.oracle import (
    oracle_all_subgroups,
    verify_classes,
    verify_masks,
)
from sublattice.core.subgroups.perfect import find_perfect_subgroups
from sublattice.core.subgroups.zuppos import (
    Zuppo,
    ZuppoSignature,
    ZuppoTable,
    compute_zuppos,
    conjugate_signature,
    signature,
)

__all__ = [
    "LatticeFilter",
    "SubgroupClass",
    "SubgroupPredicate",
    "Zuppo",
    "ZuppoSignature",
    "ZuppoTable",
    "compute_zuppos",
    "conjugate_signature",
    "cyclic_extension_step",
    "element_order_profile",
    "find_perfect_subgroups",
    "is_conjugate_subgroups",
    "lattice_cyclic_extension",
    "oracle_all_subgroups",
    "registry",
    "signature",
    "sort_classes",
    "sylow_subgroup",
    "total_subgroups",
    "verify_classes",
    "verify_masks",
]
