"""Subgroups of a direct product G x H by Goursat's lemma.

A subgroup S of G x H is determined by its projections A <= G and B <= H, the
normal subgroups D ◁ A and E ◁ B that S meets in each factor, and an
isomorphism chi: A/D -> B/E; then S = {(a, b) : chi(aD) = bE}.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from sublattice.core.goursat.product import DirectProduct, direct_product
from sublattice.core.goursat.quotient import FactorGroup, Isomorphism, isomorphisms
from sublattice.core.perm.group import PermGroup, generator_ranks, is_normal_mask
from sublattice.core.perm.index import ids_from_mask, popcount
from sublattice.core.subgroups.classes import SubgroupClass, build_class, sort_classes
from sublattice.core.subgroups.zuppos import ZuppoTable
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class GoursatDatum:
    """(A, B, D, E, chi) describing one subdirect product."""

    A: PermGroup
    B: PermGroup
    D: PermGroup
    E: PermGroup
    chi: Isomorphism

    @property
    def order(self) -> int:
        return self.A.order() * self.E.order()


@dataclass
class _Section:
    """A/D for one subgroup A of a factor and one D ◁ A."""

    a: PermGroup
    d: PermGroup
    a_gens: list[int]
    quotient: FactorGroup


def _sections(G: PermGroup, subgroups: Sequence[PermGroup]) -> list[_Section]:
    index = G.index
    entries = [(U, U.mask_in(G), generator_ranks(U, index)) for U in subgroups]
    sections: list[_Section] = []
    for A, a_mask, a_gens in entries:
        for D, d_mask, _ in entries:
            if d_mask & a_mask != d_mask or not is_normal_mask(index, d_mask, a_gens):
                continue
            sections.append(_Section(A, D, a_gens, FactorGroup(index, a_mask, d_mask, a_gens)))
    return sections


def goursat_data(
    G: PermGroup, H: PermGroup, subs_g: Sequence[PermGroup], subs_h: Sequence[PermGroup]
) -> list[GoursatDatum]:
    """All (A, B, D, E, chi) with A/D isomorphic to B/E."""
    left = _sections(G, subs_g)
    right = _sections(H, subs_h)
    data: list[GoursatDatum] = []
    for s in left:
        for t in right:
            if s.quotient.order != t.quotient.order:
                continue
            for chi in isomorphisms(s.quotient, t.quotient):
                data.append(GoursatDatum(s.a, t.a, s.d, t.d, chi))
    return data


def subgroup_of_datum(product: DirectProduct, datum: GoursatDatum) -> PermGroup:
    """Generated by D x 1, 1 x E and one lift (a, b) per generator a of A."""
    G, H = product.left, product.right
    chi = datum.chi
    h_elements = H.index.elements
    gens = [product.embed_left(d) for d in datum.D.generators]
    gens += [product.embed_right(e) for e in datum.E.generators]
    for a in datum.A.generators:
        coset = chi.source.coset_of[G.index.rank(a)]
        b = h_elements[chi.target.reps[chi(coset)]]
        gens.append(product.pair(a, b))
    return PermGroup([g for g in gens if not g.is_identity()], product.group.degree)


def _sort_key(mask: int) -> tuple[int, list[int]]:
    return popcount(mask), ids_from_mask(mask)


def goursat_subgroups(
    G: PermGroup,
    H: PermGroup,
    subs_g: Sequence[PermGroup],
    subs_h: Sequence[PermGroup],
    product: DirectProduct | None = None,
) -> list[PermGroup]:
    """Every subgroup of G x H, given complete subgroup lists of G and H."""
    product = product or direct_product(G, H)
    index = product.group.index
    found: dict[int, PermGroup] = {}
    data = goursat_data(G, H, subs_g, subs_h)
    for datum in data:
        S = subgroup_of_datum(product, datum)
        mask = S.mask_in(product.group)
        if popcount(mask) != datum.order:  # pragma: no cover - guaranteed by Goursat's lemma
            raise AssertionError(f"subdirect product of order {popcount(mask)} != {datum.order}")
        found.setdefault(mask, S)
    log.info(f"Goursat: {len(data)} data, {len(found)} subgroups of order {index.order}")
    return [found[m] for m in sorted(found, key=_sort_key)]


def goursat_classes(product: DirectProduct, subgroups: Sequence[PermGroup]) -> list[SubgroupClass]:
    """Fuse a complete subgroup list of G x H into conjugacy classes."""
    P = product.group
    index = P.index
    table = ZuppoTable(P)
    ambient = generator_ranks(P, index)
    covered: set[int] = set()
    classes: list[SubgroupClass] = []
    for S in subgroups:
        mask = S.mask_in(P)
        if mask in covered:
            continue
        cls = build_class(table, ambient, mask, generator_ranks(S, index))
        covered.update(cls.members)
        classes.append(cls)
    return sort_classes(classes)
