"""Perfect subgroups found by a two-generator search.

Every perfect subgroup lies in the perfect core (last derived term) of G, so
the search runs there: for each class representative a of the core and each
representative b of the C(a)-orbits on the core, the perfect core of <a, b> is
recorded. This finds every two-generated perfect subgroup up to conjugacy; it
is not claimed complete in general.
"""

from __future__ import annotations

from collections.abc import Sequence

from sublattice.core.perm.group import (
    PermGroup,
    centralizer_in,
    conjugacy_orbits,
    generator_ranks,
    normalizer_in,
    perfect_core_in,
)
from sublattice.core.perm.index import ElementIndex, ids_from_mask, popcount
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


def _orbit_representatives(
    index: ElementIndex, domain: int, acting: Sequence[int]
) -> list[int]:
    """Minimal ranks of the conjugation orbits of ``acting`` on the subset ``domain``."""
    covered = 0
    reps: list[int] = []
    for r in ids_from_mask(domain):
        if (covered >> r) & 1:
            continue
        reps.append(r)
        orbit = [r]
        covered |= 1 << r
        for i in orbit:
            for g in acting:
                j = index.conjugate(i, g)
                if not (covered >> j) & 1:
                    covered |= 1 << j
                    orbit.append(j)
    return reps


def perfect_subgroup_masks(
    index: ElementIndex, ambient_gens: Sequence[int]
) -> list[tuple[int, list[int]]]:
    """Non-trivial perfect subgroups up to conjugacy, as (mask, generator ranks)."""
    core_mask, core_gens = perfect_core_in(index, ambient_gens)
    if core_mask == 1:
        return []

    core_classes = conjugacy_orbits_in(index, core_mask, core_gens)
    seen: set[int] = set()
    memo: dict[int, int] = {}
    found: list[tuple[int, list[int]]] = []
    for a in core_classes:
        _, cent_gens = centralizer_in(index, core_gens, a, popcount(core_mask))
        c_mask = index.closure(cent_gens)
        for b in _orbit_representatives(index, core_mask, cent_gens):
            if (c_mask >> b) & 1:
                # <a, b> is abelian
                continue
            pair_mask = index.closure([a, b])
            if pair_mask in memo:
                continue
            mask, gens = perfect_core_in(index, [a, b])
            memo[pair_mask] = mask
            if mask == 1 or mask in seen:
                continue
            _, _, orbit = normalizer_in(index, ambient_gens, mask)
            seen.update(orbit)
            found.append((mask, gens))
            log.debug(f"Perfect subgroup of order {popcount(mask)} found")
    found.sort(key=lambda item: (popcount(item[0]), ids_from_mask(item[0])))
    return found


def conjugacy_orbits_in(index: ElementIndex, mask: int, gens: Sequence[int]) -> list[int]:
    """Class representatives of the subgroup ``mask`` under its own conjugation."""
    if mask.bit_count() == index.order:
        return [orbit[0] for orbit in conjugacy_orbits(index, gens)]
    return _orbit_representatives(index, mask, gens)


def find_perfect_subgroups(G: PermGroup) -> list[PermGroup]:
    """The trivial subgroup followed by the perfect subgroups found, up to conjugacy.

    Args:
        G: the group

    Returns:
        Representatives in ascending order of size, the trivial group first.
    """
    index = G.index
    found = perfect_subgroup_masks(index, generator_ranks(G, index))
    return [PermGroup([], G.degree)] + [PermGroup.from_ranks(index, gens) for _, gens in found]
