"""Conjugacy classes of subgroups by cyclic extension.

Each non-perfect subgroup S has a normal subgroup U of prime index p, and
S = <U, n> for a zuppo generator n normalizing U with n^p in U. Starting from
the perfect subgroups, every known class is extended by such zuppos until no
new subgroup appears.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from sympy import factorint, isprime

from sublattice.core.perm.group import PermGroup, derived_in, generator_ranks
from sublattice.core.perm.index import ElementIndex, popcount
from sublattice.core.subgroups.classes import (
    SubgroupClass,
    build_class,
    fuse_classes,
    sort_classes,
)
from sublattice.core.subgroups.filters import LatticeFilter
from sublattice.core.subgroups.perfect import perfect_subgroup_masks
from sublattice.core.subgroups.zuppos import ZuppoTable
from sublattice.utils.error_handler import NotASubgroupError, ValidationError
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


def _power(index: ElementIndex, r: int, e: int) -> int:
    result = 0
    for _ in range(e):
        result = index.mul(result, r)
    return result


def cyclic_extension_step(
    cls: SubgroupClass, table: ZuppoTable, known: set[int] | None = None
) -> list[tuple[int, list[int]]]:
    """Subgroups <U, n> of order |U|*p for the representative U of ``cls``.

    Only zuppos n in N(U) outside U with n^p in U are tried.

    Args:
        cls: class whose representative is extended
        table: zuppo table of the ambient group
        known: signature bits of subgroups already found; matching extensions
            are skipped

    Returns:
        (mask, generator ranks) pairs, each new subgroup once.
    """
    index = table.index
    known = known if known is not None else set()
    emitted: set[int] = set()
    out: list[tuple[int, list[int]]] = []
    u_mask = cls.mask
    for z in table.zuppos:
        n = z.rank
        if (u_mask >> n) & 1 or not (cls.normalizer_mask >> n) & 1:
            continue
        p = z.prime
        if not (u_mask >> _power(index, n, p)) & 1:
            continue
        powers = [0]
        for _ in range(p - 1):
            powers.append(index.mul(powers[-1], n))
        mask = index.product_mask(u_mask, powers)
        if mask in emitted:
            continue
        emitted.add(mask)
        if table.signature_of_mask(mask).bits in known:
            continue
        out.append((mask, [*cls.generators, n]))
    return out


class _ClassCollector:
    """Known classes, with every member's signature registered."""

    def __init__(self, table: ZuppoTable, ambient_gens: Sequence[int]):
        self.table = table
        self.ambient_gens = list(ambient_gens)
        self.classes: list[SubgroupClass] = []
        self.known: set[int] = set()
        self.rejected: set[int] = set()

    def add(self, mask: int, gens: Sequence[int]) -> SubgroupClass | None:
        if self.table.signature_of_mask(mask).bits in self.known:
            return None
        cls = build_class(self.table, self.ambient_gens, mask, gens)
        for member in cls.members:
            self.known.add(self.table.signature_of_mask(member).bits)
        self.classes.append(cls)
        return cls


def _check_seed(index: ElementIndex, mask: int, gens: Sequence[int]) -> None:
    derived, _ = derived_in(index, gens)
    if derived != mask:
        raise ValidationError("seed", f"order {popcount(mask)}", "seed subgroup is not perfect")


def lattice_cyclic_extension(
    G: PermGroup,
    filter: LatticeFilter | None = None,
    seeds: Iterable[PermGroup] = (),
    acting: PermGroup | None = None,
) -> list[SubgroupClass]:
    """All conjugacy classes of subgroups of G that pass ``filter``.

    Args:
        G: the group
        filter: downward-closed restriction of the subgroups kept
        seeds: extra perfect subgroups added to the ones found by search
        acting: classify up to conjugacy by this group (which must normalize G)
            instead of G; see ``fuse_classes``

    Returns:
        Classes sorted by order, then by representative signature.

    Raises:
        FilterError: the filter names an unknown or non-inherited predicate
        ValidationError: a seed is not a perfect subgroup of G, or ``acting``
            does not normalize G
    """
    filter = filter or LatticeFilter()
    filter.predicate()  # rejects unknown and non-inherited predicates early
    index = G.index
    ambient_gens = generator_ranks(G, index)
    table = ZuppoTable(G)
    collector = _ClassCollector(table, ambient_gens)

    frontier: list[SubgroupClass] = []
    trivial = collector.add(1, [])
    assert trivial is not None
    frontier.append(trivial)

    perfect: list[tuple[int, list[int]]] = []
    if filter.admits_perfect():
        perfect = perfect_subgroup_masks(index, ambient_gens)
    for seed in seeds:
        try:
            mask = seed.mask_in(G)
        except NotASubgroupError:
            raise ValidationError("seed", repr(seed), "not a subgroup of the group") from None
        gens = generator_ranks(seed, index)
        _check_seed(index, mask, gens)
        perfect.append((mask, gens))
    for mask, gens in perfect:
        if filter.accepts(index, mask, gens):
            cls = collector.add(mask, gens)
            if cls is not None:
                frontier.append(cls)
    log.debug(f"Cyclic extension seeded with {len(frontier)} classes")

    while frontier:
        next_frontier: list[SubgroupClass] = []
        for cls in frontier:
            for mask, gens in cyclic_extension_step(cls, table, collector.known):
                sig = table.signature_of_mask(mask).bits
                if sig in collector.rejected or sig in collector.known:
                    continue
                if not filter.accepts(index, mask, gens):
                    collector.rejected.add(sig)
                    continue
                new = collector.add(mask, gens)
                if new is not None:
                    next_frontier.append(new)
        log.debug(f"Frontier produced {len(next_frontier)} new classes")
        frontier = next_frontier

    classes = sort_classes(collector.classes)
    log.info(
        f"Cyclic extension: {len(classes)} classes / "
        f"{sum(c.length for c in classes)} subgroups in a group of order {index.order}"
    )
    if acting is not None:
        classes = fuse_classes(G, classes, acting)
    return classes


def sylow_subgroup(G: PermGroup, p: int) -> PermGroup:
    """A Sylow p-subgroup, the largest class of the p-group-filtered lattice.

    Args:
        G: the group
        p: a prime; the trivial group is returned when p does not divide |G|

    Returns:
        A subgroup of order the p-part of |G|.

    Raises:
        ValidationError: p is not prime
    """
    if not isprime(p):
        raise ValidationError("p", p, "must be prime")
    order = G.order()
    if order % p:
        return PermGroup([], G.degree)
    classes = lattice_cyclic_extension(
        G, LatticeFilter(predicate_id=f"p-group:{p}", order_divides=p ** factorint(order)[p])
    )
    return classes[-1].representative
