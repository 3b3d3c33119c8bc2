"""
Sublattice CLI - subgroup lattices of finite permutation groups

Computes conjugacy classes of subgroups with:
- Cyclic extension over zuppo bit lists, seeded with perfect subgroups
- Elementary-abelian lifting for solvable groups
- Goursat construction for direct products
- Maximal, low-layer and intermediate subgroup queries
- DOT and JSON lattice export, checked against a brute-force oracle
"""

__version__ = "0.1.0"
__author__ = "sublattice-cli"

from sublattice.core.config import settings

__all__ = ["settings", "__version__"]
