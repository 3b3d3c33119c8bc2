"""Brute-force subgroup enumeration by join-closure, used to verify the engine."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from sublattice.core.config import settings
from sublattice.core.perm.group import PermGroup
from sublattice.core.perm.index import ElementIndex, ids_from_mask, popcount
from sublattice.core.subgroups.classes import SubgroupClass
from sublattice.core.subgroups.filters import LatticeFilter
from sublattice.utils.error_handler import GroupTooLargeError, VerificationError
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


def oracle_subgroup_masks(index: ElementIndex) -> dict[int, list[int]]:
    """Every subgroup of the indexed group, as mask -> generator ranks.

    Starts from the cyclic subgroups and joins each new subgroup with every
    cyclic subgroup it does not contain, until nothing new appears.
    """
    cyclic: dict[int, int] = {}
    for r in range(index.order):
        mask = index.closure([r])
        cyclic.setdefault(mask, r)

    found: dict[int, list[int]] = {mask: ([r] if r else []) for mask, r in cyclic.items()}
    frontier = list(found)
    while frontier:
        next_frontier: list[int] = []
        for mask in frontier:
            gens = found[mask]
            for c_mask, c in cyclic.items():
                if c_mask & mask == c_mask:
                    continue
                joined = index.closure([*gens, c], seed=mask)
                if joined not in found:
                    found[joined] = [*gens, c]
                    next_frontier.append(joined)
        frontier = next_frontier
    log.debug(f"Oracle: {len(found)} subgroups in a group of order {index.order}")
    return found


def oracle_all_subgroups(G: PermGroup, limit: int | None = None) -> list[PermGroup]:
    """Every subgroup of G, ordered by (order, element ranks).

    Args:
        G: the group
        limit: largest accepted order; defaults to ``settings.engine.oracle_limit``

    Returns:
        One group per subgroup, generated by the ranks that built it.

    Raises:
        GroupTooLargeError: |G| exceeds the limit
    """
    limit = settings.engine.oracle_limit if limit is None else limit
    order = G.order()
    if order > limit:
        raise GroupTooLargeError(order, limit, "oracle limit")
    index = G.index
    found = oracle_subgroup_masks(index)
    masks = sorted(found, key=lambda m: (popcount(m), ids_from_mask(m)))
    return [PermGroup.from_ranks(index, found[m]) for m in masks]


def verify_masks(G: PermGroup, masks: Iterable[int], filter: LatticeFilter | None = None) -> int:
    """Compare a subgroup family of G with the oracle; returns the family size.

    Raises VerificationError when the two differ as sets of element sets.
    """
    limit = settings.engine.oracle_limit
    if G.order() > limit:
        raise GroupTooLargeError(G.order(), limit, "oracle limit")
    index = G.index
    oracle = oracle_subgroup_masks(index)
    if filter is not None and not filter.is_trivial():
        expected = {m for m, gens in oracle.items() if filter.accepts(index, m, gens)}
    else:
        expected = set(oracle)
    engine = list(masks)
    actual = set(engine)
    if len(actual) != len(engine):
        raise VerificationError(len(expected), len(engine), "engine lists a subgroup twice")
    if actual != expected:
        missing, extra = len(expected - actual), len(actual - expected)
        raise VerificationError(
            len(expected), len(actual), f"{missing} subgroups missing, {extra} unexpected"
        )
    log.info(f"Verified {len(actual)} subgroups against the oracle")
    return len(actual)


def verify_classes(
    G: PermGroup, classes: Sequence[SubgroupClass], filter: LatticeFilter | None = None
) -> int:
    """Oracle check of expanded classes plus the class equation for each class."""
    order = G.order()
    for cls in classes:
        if cls.length * cls.normalizer_order != order:
            raise VerificationError(
                order, cls.length * cls.normalizer_order, "class length is not the normalizer index"
            )
    return verify_masks(G, (m for cls in classes for m in cls.members), filter)
