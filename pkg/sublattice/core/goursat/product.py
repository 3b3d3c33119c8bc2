"""Direct products of permutation groups on disjoint point sets."""

from __future__ import annotations

from dataclasses import dataclass

from sublattice.core.perm.group import PermGroup
from sublattice.core.perm.permutation import Permutation


@dataclass(frozen=True)
class DirectProduct:
    """G x H acting on points 1..deg(G) (left factor) and the following deg(H) points."""

    group: PermGroup
    left: PermGroup
    right: PermGroup

    @property
    def split(self) -> int:
        return self.left.degree

    def embed_left(self, g: Permutation) -> Permutation:
        return g.embed(self.group.degree, 0)

    def embed_right(self, h: Permutation) -> Permutation:
        return h.embed(self.group.degree, self.split)

    def pair(self, g: Permutation, h: Permutation) -> Permutation:
        """The element (g, h)."""
        return self.embed_left(g) * self.embed_right(h)

    def project_left(self, x: Permutation) -> Permutation:
        return x.restrict(0, self.split)

    def project_right(self, x: Permutation) -> Permutation:
        return x.restrict(self.split, self.group.degree)


def direct_product(G: PermGroup, H: PermGroup) -> DirectProduct:
    degree = G.degree + H.degree
    gens = [g.embed(degree, 0) for g in G.generators]
    gens += [h.embed(degree, G.degree) for h in H.generators]
    name = f"{G.name}x{H.name}" if G.name and H.name else None
    return DirectProduct(PermGroup(gens, degree, name=name), G, H)
