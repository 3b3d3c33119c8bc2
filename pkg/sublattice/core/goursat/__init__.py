"""Direct products and their subgroups via Goursat's lemma."""

from sublattice.core.goursat.product import DirectProduct, direct_product
from sublattice.core.goursat.quotient import FactorGroup, Isomorphism, isomorphisms
from sublattice.core.goursat.subdirect import (
    GoursatDatum,
    goursat_classes,
    goursat_data,
    goursat_subgroups,
)

__all__ = [
    "DirectProduct",
    "FactorGroup",
    "GoursatDatum",
    "Isomorphism",
    "direct_product",
    "goursat_classes",
    "goursat_data",
    "goursat_subgroups",
    "isomorphisms",
]
