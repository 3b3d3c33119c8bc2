"""Permutation groups and the mid-level tools built on their stabilizer chains.

Operations that scan elements work inside the ambient group's element index:
subgroups become bit masks over its ranks (see ``sublattice.core.perm.index``).
"""

from __future__ import annotations

import threading
from collections.abc import Callable, Hashable, Iterable, Sequence
from typing import TypeVar

from sublattice.core.config import settings
from sublattice.core.perm.chain import StabilizerChain, schreier_sims
from sublattice.core.perm.index import ElementIndex, ids_from_mask, popcount
from sublattice.core.perm.permutation import Permutation
from sublattice.utils.error_handler import (
    DegreeMismatchError,
    GroupTooLargeError,
    NotAMemberError,
    NotASubgroupError,
    ValidationError,
)
from sublattice.utils.logger import get_logger

log = get_logger(__name__)

P = TypeVar("P", bound=Hashable)


class PermGroup:
    """A permutation group given by generators, with cached chain and element index."""

    def __init__(
        self,
        generators: Iterable[Permutation],
        degree: int | None = None,
        name: str | None = None,
    ):
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise ValidationError("degree", None, "required when there are no generators")
            degree = gens[0].degree
        if degree < 1:
            raise ValidationError("degree", degree, "must be positive")
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError(degree, g.degree)
        self.degree = degree
        self.generators = gens
        self.name = name
        self._lock = threading.Lock()
        self._chain: StabilizerChain | None = None
        self._index: ElementIndex | None = None

    @classmethod
    def from_ranks(
        cls, index: ElementIndex, ranks: Iterable[int], name: str | None = None
    ) -> PermGroup:
        elements = index.elements
        return cls([elements[r] for r in ranks if r != 0], index.degree, name)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = build_stabilizer_chain(self)
        return self._chain

    @property
    def index(self) -> ElementIndex:
        if self._index is None:
            chain = self.chain
            with self._lock:
                if self._index is None:
                    self._index = ElementIndex(chain)
        return self._index

    def order(self) -> int:
        return self.chain.order

    def __contains__(self, g: Permutation) -> bool:
        return contains(self, g)

    def mask_in(self, ambient: PermGroup) -> int:
        """Element mask of this group inside the ambient group's index."""
        try:
            return ambient.index.closure_of(self.generators)
        except NotAMemberError as e:
            raise NotASubgroupError(repr(self)) from e

    def same_elements(self, other: PermGroup) -> bool:
        if self.degree != other.degree or self.order() != other.order():
            return False
        return all(contains(self, g) for g in other.generators)

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators) or "()"
        label = f"{self.name}: " if self.name else ""
        return f"PermGroup({label}<{gens}>, degree={self.degree})"


# ---------------------------------------------------------------------- chain-level tools


def build_stabilizer_chain(G: PermGroup, cap: int | None = None) -> StabilizerChain:
    """Deterministic Schreier-Sims for G, refusing orders above the element cap.

    Args:
        G: the group
        cap: largest accepted order; defaults to ``settings.engine.element_cap``

    Returns:
        The stabilizer chain, verified to contain every generator.

    Raises:
        GroupTooLargeError: the order exceeds the cap
    """
    limit = settings.engine.element_cap if cap is None else cap
    chain = schreier_sims(G.generators, G.degree)
    if chain.order > limit:
        raise GroupTooLargeError(chain.order, limit, "element cap")
    if not chain.verify(G.generators):  # pragma: no cover - guaranteed by construction
        raise AssertionError("stabilizer chain does not contain its generators")
    return chain


def group_order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, g: Permutation) -> bool:
    """Membership of g in G by sifting through the chain.

    Raises:
        DegreeMismatchError: g acts on another number of points
    """
    if g.degree != G.degree:
        raise DegreeMismatchError(G.degree, g.degree)
    return G.chain.contains(g)


def _require_member(G: PermGroup, g: Permutation) -> int:
    if g.degree != G.degree:
        raise DegreeMismatchError(G.degree, g.degree)
    return G.index.rank(g)


def _require_subgroup(G: PermGroup, U: PermGroup) -> int:
    if U.degree != G.degree:
        raise DegreeMismatchError(G.degree, U.degree)
    return U.mask_in(G)


# ---------------------------------------------------------------------- orbit-stabilizer


def orbit_stabilizer(
    index: ElementIndex,
    generators: Sequence[int],
    start: P,
    act: Callable[[P, int], P],
    group_order: int | None = None,
) -> tuple[dict[P, int], list[int], int]:
    """Orbit of ``start`` under a right action, with Schreier generators of its stabilizer.

    Returns (point -> rank of a transversal element, stabilizer generator ranks,
    stabilizer mask). Only Schreier generators outside the subgroup generated so
    far are kept. ``group_order`` is the order of <generators>; it defaults to
    the whole index.
    """
    transversal: dict[P, int] = {start: 0}
    queue = [start]
    for point in queue:
        t = transversal[point]
        for g in generators:
            image = act(point, g)
            if image not in transversal:
                transversal[image] = index.mul(t, g)
                queue.append(image)

    stab_gens: list[int] = []
    stab_mask = 1
    target = (index.order if group_order is None else group_order) // len(queue)
    for point in queue:
        if popcount(stab_mask) == target:
            break
        t = transversal[point]
        for g in generators:
            image = act(point, g)
            s = index.mul(index.mul(t, g), index.inverse(transversal[image]))
            if not (stab_mask >> s) & 1:
                stab_gens.append(s)
                stab_mask = index.closure(stab_gens, seed=stab_mask)
                if popcount(stab_mask) == target:
                    break
    return transversal, stab_gens, stab_mask


def generator_ranks(G: PermGroup, index: ElementIndex | None = None) -> list[int]:
    index = index or G.index
    return [index.rank(g) for g in G.generators if not g.is_identity()]


# ---------------------------------------------------------------------- mid-level tools


def coset_representatives(G: PermGroup, S: PermGroup) -> list[Permutation]:
    """Right transversal of S in G: one minimal-rank element per coset S*g."""
    mask = _require_subgroup(G, S)
    index = G.index
    return [index.elements[r] for r in right_transversal(index, mask)]


def right_transversal(index: ElementIndex, mask: int, within: int | None = None) -> list[int]:
    """Minimal ranks of the right cosets of the subgroup ``mask``.

    With ``within`` (a subgroup mask containing ``mask``) only the cosets inside
    that subgroup are listed.
    """
    members = ids_from_mask(mask)
    covered = bytearray(index.order)
    reps: list[int] = []
    for r in range(index.order) if within is None else ids_from_mask(within):
        if covered[r]:
            continue
        reps.append(r)
        for s in members:
            covered[index.mul(s, r)] = 1
    return reps


def conjugacy_orbits(index: ElementIndex, generators: Sequence[int]) -> list[list[int]]:
    """Conjugacy classes of elements as rank lists, each led by its minimal rank."""
    covered = bytearray(index.order)
    classes: list[list[int]] = []
    for r in range(index.order):
        if covered[r]:
            continue
        covered[r] = 1
        orbit = [r]
        for i in orbit:
            for g in generators:
                j = index.conjugate(i, g)
                if not covered[j]:
                    covered[j] = 1
                    orbit.append(j)
        classes.append(sorted(orbit))
    return classes


def conjugacy_classes_elements(G: PermGroup) -> list[tuple[Permutation, int]]:
    index = G.index
    orbits = conjugacy_orbits(index, generator_ranks(G, index))
    log.debug(f"{len(orbits)} conjugacy classes of elements in a group of order {index.order}")
    return [(index.elements[orbit[0]], len(orbit)) for orbit in orbits]


def centralizer(G: PermGroup, g: Permutation) -> PermGroup:
    index = G.index
    r = _require_member(G, g)
    _, stab, _ = orbit_stabilizer(index, generator_ranks(G, index), r, index.conjugate)
    return PermGroup.from_ranks(index, stab)


def centralizer_in(
    index: ElementIndex, generators: Sequence[int], r: int, group_order: int | None = None
) -> tuple[int, list[int]]:
    """Centralizer of the element of rank r in <generators>, as (mask, generator ranks)."""
    _, stab, mask = orbit_stabilizer(index, generators, r, index.conjugate, group_order)
    return mask, stab


def conjugating_element(G: PermGroup, g: Permutation, h: Permutation) -> Permutation | None:
    """Some x in G with x⁻¹gx = h.

    Args:
        G: the group
        g: an element of G
        h: an element of G

    Returns:
        A conjugating element, or None when g and h are not conjugate in G.

    Raises:
        NotAMemberError: g or h lies outside G
    """
    index = G.index
    rg = _require_member(G, g)
    rh = _require_member(G, h)
    transversal, _, _ = orbit_stabilizer(index, generator_ranks(G, index), rg, index.conjugate)
    x = transversal.get(rh)
    return None if x is None else index.elements[x]


def normalizer_in(
    index: ElementIndex, generators: Sequence[int], mask: int, group_order: int | None = None
) -> tuple[int, list[int], dict[int, int]]:
    """Normalizer of the subgroup ``mask`` in the group generated by ``generators``.

    Args:
        index: element index of a group containing both
        generators: ranks generating the conjugating group
        mask: the subgroup
        group_order: order of <generators>, when smaller than the index

    Returns:
        (normalizer mask, its generator ranks, conjugate mask -> transversal rank).
        The orbit keys are exactly the conjugates of ``mask``.
    """
    transversal, stab, stab_mask = orbit_stabilizer(
        index, generators, mask, index.conjugate_mask, group_order
    )
    return stab_mask, stab, transversal


def normalizer(G: PermGroup, U: PermGroup) -> PermGroup:
    """N_G(U) as a group on the same points.

    Raises:
        NotASubgroupError: U is not contained in G
    """
    index = G.index
    mask = _require_subgroup(G, U)
    _, stab, _ = normalizer_in(index, generator_ranks(G, index), mask)
    return PermGroup.from_ranks(index, stab)


def is_normal_mask(index: ElementIndex, mask: int, generators: Iterable[int]) -> bool:
    return all(index.conjugate_mask(mask, g) == mask for g in generators)


def is_normal(G: PermGroup, U: PermGroup) -> bool:
    _require_subgroup(G, U)
    return all(contains(U, u.conjugate(g)) for g in G.generators for u in U.generators)


def derived_in(index: ElementIndex, generators: Sequence[int]) -> tuple[int, list[int]]:
    """Derived subgroup of <generators> as (mask, generator ranks)."""
    elements = index.elements
    gens: list[int] = []
    mask = 1
    for i, a in enumerate(generators):
        for b in generators[i + 1 :]:
            c = index.rank(elements[a].commutator(elements[b]))
            if not (mask >> c) & 1:
                gens.append(c)
                mask = index.closure(gens, seed=mask)
    # normal closure under the generators
    changed = True
    while changed:
        changed = False
        for n in list(gens):
            for g in generators:
                c = index.conjugate(n, g)
                if not (mask >> c) & 1:
                    gens.append(c)
                    mask = index.closure(gens, seed=mask)
                    changed = True
    return mask, gens


def derived_subgroup(G: PermGroup) -> PermGroup:
    """[G, G], the normal closure of the generator commutators."""
    index = G.index
    _, gens = derived_in(index, generator_ranks(G, index))
    return PermGroup.from_ranks(index, gens)


def perfect_core_in(index: ElementIndex, generators: Sequence[int]) -> tuple[int, list[int]]:
    """Last term of the derived series of <generators>."""
    mask = index.closure(generators)
    gens = list(generators)
    while True:
        derived_mask, derived_gens = derived_in(index, gens)
        if derived_mask == mask:
            return mask, gens
        mask, gens = derived_mask, derived_gens


def is_solvable(G: PermGroup) -> bool:
    """Whether the derived series of G reaches the trivial group."""
    index = G.index
    mask, _ = perfect_core_in(index, generator_ranks(G, index))
    return mask == 1
