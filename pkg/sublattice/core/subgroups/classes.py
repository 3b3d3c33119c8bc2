"""Conjugacy classes of subgroups: representative, normalizer and transversal."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from sublattice.core.perm.group import (
    PermGroup,
    contains,
    generator_ranks,
    normalizer_in,
    right_transversal,
)
from sublattice.core.perm.index import ElementIndex, ids_from_mask, popcount
from sublattice.core.perm.permutation import Permutation
from sublattice.core.subgroups.zuppos import ZuppoSignature, ZuppoTable
from sublattice.utils.error_handler import DegreeMismatchError, ValidationError
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


@dataclass
class SubgroupClass:
    """One conjugacy class of subgroups of an ambient group.

    The representative is the member with the lexicographically smallest
    signature; members are listed as the conjugates of the representative by
    the transversal, in transversal order (the representative comes first).
    """

    representative: PermGroup
    normalizer: PermGroup
    transversal: list[Permutation]
    mask: int
    normalizer_mask: int
    generators: list[int]
    signature: ZuppoSignature
    members: list[int] = field(default_factory=list)
    transversal_ranks: list[int] = field(default_factory=list)

    @property
    def order(self) -> int:
        return popcount(self.mask)

    @property
    def length(self) -> int:
        return len(self.transversal)

    @property
    def normalizer_order(self) -> int:
        return popcount(self.normalizer_mask)

    @property
    def is_normal(self) -> bool:
        return self.length == 1

    def member_generators(self, j: int, index: ElementIndex) -> list[int]:
        """Generator ranks of member j (the representative conjugated by transversal j)."""
        t = self.transversal_ranks[j]
        return [index.conjugate(g, t) for g in self.generators]

    def member_group(self, j: int, index: ElementIndex) -> PermGroup:
        return PermGroup.from_ranks(index, self.member_generators(j, index))

    def member_groups(self, index: ElementIndex) -> list[PermGroup]:
        return [self.member_group(j, index) for j in range(self.length)]

    def __repr__(self) -> str:
        return (
            f"SubgroupClass(order={self.order}, length={self.length}, "
            f"normal={self.is_normal}, rep={self.representative!r})"
        )


def build_class(
    table: ZuppoTable,
    ambient_gens: Sequence[int],
    mask: int,
    gens: Sequence[int],
    ambient_mask: int | None = None,
) -> SubgroupClass:
    """The class of the subgroup ``mask``, canonically represented.

    Args:
        table: zuppo table of the indexed group
        ambient_gens: ranks generating the conjugating group
        mask: the subgroup
        gens: generator ranks of the subgroup
        ambient_mask: element mask of the conjugating group when it is smaller
            than the indexed group

    Returns:
        The class, led by the member of smallest signature.
    """
    index = table.index
    group_order = None if ambient_mask is None else popcount(ambient_mask)
    n_mask, n_gens, orbit = normalizer_in(index, ambient_gens, mask, group_order)

    canonical = min(orbit, key=lambda m: table.signature_of_mask(m).key)
    t = orbit[canonical]
    if t != 0:
        gens = [index.conjugate(g, t) for g in gens]
        n_gens = [index.conjugate(g, t) for g in n_gens]
        n_mask = index.conjugate_mask(n_mask, t)

    transversal = right_transversal(index, n_mask, ambient_mask)
    members = [index.conjugate_mask(canonical, r) for r in transversal]
    elements = index.elements
    return SubgroupClass(
        representative=PermGroup.from_ranks(index, gens),
        normalizer=PermGroup.from_ranks(index, n_gens),
        transversal=[elements[r] for r in transversal],
        mask=canonical,
        normalizer_mask=n_mask,
        generators=list(gens),
        signature=table.signature_of_mask(canonical),
        members=members,
        transversal_ranks=transversal,
    )


def sort_classes(classes: Iterable[SubgroupClass]) -> list[SubgroupClass]:
    """Canonical order: by order, then by the representative's signature."""
    return sorted(classes, key=lambda c: (c.order, c.signature.key))


def total_subgroups(classes: Iterable[SubgroupClass]) -> int:
    return sum(c.length for c in classes)


def element_order_profile(G: PermGroup, U: PermGroup) -> tuple[int, ...]:
    """Sorted multiset of element orders of U."""
    index = G.index
    return order_profile_of_mask(index, U.mask_in(G))


def order_profile_of_mask(index: ElementIndex, mask: int) -> tuple[int, ...]:
    return tuple(sorted(index.element_order(i) for i in ids_from_mask(mask)))


def is_conjugate_subgroups(G: PermGroup, U: PermGroup, V: PermGroup) -> Permutation | None:
    """Some x in G with U^x = V.

    Order and element-order profiles are compared first; the orbit of U under
    G decides the rest.

    Args:
        G: the group
        U: a subgroup of G
        V: a subgroup of G

    Returns:
        A conjugating element, or None when U and V are not conjugate in G.

    Raises:
        DegreeMismatchError: U or V acts on another number of points
        NotASubgroupError: U or V is not contained in G
    """
    for H in (U, V):
        if H.degree != G.degree:
            raise DegreeMismatchError(G.degree, H.degree)
    index = G.index
    u_mask = U.mask_in(G)
    v_mask = V.mask_in(G)
    if u_mask == v_mask:
        return Permutation.identity(G.degree)
    if popcount(u_mask) != popcount(v_mask):
        return None
    if order_profile_of_mask(index, u_mask) != order_profile_of_mask(index, v_mask):
        return None
    _, _, orbit = normalizer_in(index, generator_ranks(G, index), u_mask)
    x = orbit.get(v_mask)
    return None if x is None else index.elements[x]


def fuse_classes(
    G: PermGroup, classes: Sequence[SubgroupClass], acting: PermGroup
) -> list[SubgroupClass]:
    """Classes of subgroups of G up to conjugacy by ``acting`` instead of G.

    The returned classes live in the element index of <G, acting>: member
    masks refer to that group, and normalizers and transversals are taken
    inside ``acting``. G-classes fuse or split as the action requires.

    Args:
        G: the group whose subgroups are classified
        classes: every class of subgroups of G (or of a filtered family)
        acting: a group normalizing G

    Returns:
        Classes in canonical order; each length is [acting : N_acting(U)].

    Raises:
        DegreeMismatchError: ``acting`` has another degree
        ValidationError: ``acting`` does not normalize G
    """
    if acting.degree != G.degree:
        raise DegreeMismatchError(G.degree, acting.degree)
    for a in acting.generators:
        if not all(contains(G, g.conjugate(a)) for g in G.generators):
            raise ValidationError(
                "acting", acting.name or repr(acting), "does not normalize the group"
            )

    joined = PermGroup([*G.generators, *acting.generators], G.degree)
    index = joined.index
    table = ZuppoTable(joined)
    acting_gens = generator_ranks(acting, index)
    acting_mask = acting.mask_in(joined)

    known: set[int] = set()
    fused: list[SubgroupClass] = []
    for cls in classes:
        for U in cls.member_groups(G.index):
            mask = U.mask_in(joined)
            if table.signature_of_mask(mask).bits in known:
                continue
            new = build_class(table, acting_gens, mask, generator_ranks(U, index), acting_mask)
            known.update(table.signature_of_mask(m).bits for m in new.members)
            fused.append(new)
    log.debug(f"{len(classes)} classes fused into {len(fused)} under the acting group")
    return sort_classes(fused)
