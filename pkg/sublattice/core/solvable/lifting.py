"""Subgroup classes of a solvable group by lifting through an elementary abelian series.

With G = R_0 > R_1 > ... > R_k = 1, the classes of subgroups containing R_i
are known after step i. A subgroup S containing R_{i+1} is determined by
A = S R_i (a known subgroup) and B = S ∩ R_i, an A-submodule of R_i/R_{i+1};
S/B is then a complement to R_i/B in A/B.
"""

from __future__ import annotations

from collections.abc import Sequence

from sublattice.core.perm.group import PermGroup, generator_ranks
from sublattice.core.perm.index import ElementIndex
from sublattice.core.solvable.complements import complement_masks
from sublattice.core.solvable.module import build_layer_module, submodules
from sublattice.core.solvable.series import elementary_abelian_series
from sublattice.core.subgroups.classes import SubgroupClass, build_class, sort_classes
from sublattice.core.subgroups.filters import LatticeFilter
from sublattice.core.subgroups.zuppos import ZuppoTable
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


def _conjugates(index: ElementIndex, mask: int, ambient_gens: Sequence[int]) -> list[int]:
    orbit = [mask]
    seen = {mask}
    for m in orbit:
        for g in ambient_gens:
            image = index.conjugate_mask(m, g)
            if image not in seen:
                seen.add(image)
                orbit.append(image)
    return orbit


def subgroups_solvable(G: PermGroup, filter: LatticeFilter | None = None) -> list[SubgroupClass]:
    """All conjugacy classes of subgroups of a solvable G that pass ``filter``.

    Classes of G/N are lifted through each elementary abelian layer N/M of
    the series by complements and by subgroups meeting the layer.

    Args:
        G: a solvable group
        filter: downward-closed restriction of the subgroups kept

    Returns:
        Classes in the same canonical order as ``lattice_cyclic_extension``.

    Raises:
        NotSolvableError: G is not solvable
        FilterError: the filter names an unknown or non-inherited predicate
    """
    filter = filter or LatticeFilter()
    filter.predicate()
    index = G.index
    ambient_gens = generator_ranks(G, index)
    series = elementary_abelian_series(G)

    top = series.terms[0]
    reps: list[tuple[int, list[int]]] = [(top.mask, list(top.generators))]
    for depth, (upper, lower) in enumerate(zip(series.terms, series.terms[1:], strict=False)):
        seen: set[int] = set()
        lifted: list[tuple[int, list[int]]] = []
        for a_mask, a_gens in reps:
            module = build_layer_module(
                index, a_gens, upper.mask, upper.generators, lower.mask, lower.generators
            )
            for subspace in submodules(module):
                b_mask, b_gens = module.subgroup_of(subspace)
                for s_mask, s_gens in complement_masks(
                    index, a_mask, a_gens, upper.mask, upper.generators, b_mask, b_gens
                ):
                    if s_mask in seen:
                        continue
                    seen.update(_conjugates(index, s_mask, ambient_gens))
                    lifted.append((s_mask, s_gens))
        log.debug(
            f"Layer {depth + 1} ({series.primes[depth]}^{series.ranks[depth]}): "
            f"{len(reps)} -> {len(lifted)} classes"
        )
        reps = lifted

    table = ZuppoTable(G)
    classes = [
        build_class(table, ambient_gens, mask, gens)
        for mask, gens in reps
        if filter.accepts(index, mask, gens)
    ]
    classes = sort_classes(classes)
    log.info(
        f"Solvable lifting: {len(classes)} classes / "
        f"{sum(c.length for c in classes)} subgroups in a group of order {index.order}"
    )
    return classes
