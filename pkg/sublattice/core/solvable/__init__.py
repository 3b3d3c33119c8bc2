"""Subgroups of solvable groups by lifting through elementary abelian layers."""

from sublattice.core.solvable.complements import complement_masks, complements_in_layer
from sublattice.core.solvable.lifting import subgroups_solvable
from sublattice.core.solvable.module import LayerModule, layer_module, spin, submodules
from sublattice.core.solvable.series import ElementaryAbelianSeries, elementary_abelian_series

__all__ = [
    "ElementaryAbelianSeries",
    "LayerModule",
    "complement_masks",
    "complements_in_layer",
    "elementary_abelian_series",
    "layer_module",
    "spin",
    "submodules",
    "subgroups_solvable",
]
