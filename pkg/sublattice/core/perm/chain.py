"""Deterministic Schreier-Sims stabilizer chains."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from math import prod

from sublattice.core.perm.permutation import Permutation
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


@dataclass
class ChainLevel:
    """One level of a stabilizer chain.

    Attributes:
        base_point: 0-based point stabilized by the next level
        generators: strong generators of this level's group
        orbit: orbit of base_point, ascending (base_point is always first)
        transversal: orbit point -> element mapping base_point onto it
    """

    base_point: int
    generators: list[Permutation] = field(default_factory=list)
    orbit: list[int] = field(default_factory=list)
    transversal: dict[int, Permutation] = field(default_factory=dict)

    def rebuild(self, degree: int) -> None:
        """Recompute orbit and transversal from the current generators."""
        identity = Permutation.identity(degree)
        transversal = {self.base_point: identity}
        queue = [self.base_point]
        for point in queue:
            rep = transversal[point]
            for gen in self.generators:
                image = gen.images[point]
                if image not in transversal:
                    transversal[image] = rep * gen
                    queue.append(image)
        self.transversal = transversal
        self.orbit = sorted(transversal)


@dataclass
class StabilizerChain:
    """Base, strong generators and transversals of a permutation group."""

    degree: int
    levels: list[ChainLevel]

    @property
    def base(self) -> list[int]:
        """0-based base points."""
        return [level.base_point for level in self.levels]

    @property
    def orbit_lengths(self) -> list[int]:
        return [len(level.orbit) for level in self.levels]

    @property
    def order(self) -> int:
        return prod(self.orbit_lengths)

    def sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Strip g through the levels from ``start``.

        Returns the residue and the index of the level where sifting stopped
        (``len(levels)`` when every level was passed).
        """
        for i in range(start, len(self.levels)):
            level = self.levels[i]
            image = g.images[level.base_point]
            rep = level.transversal.get(image)
            if rep is None:
                return g, i
            g = g * rep.inverse()
        return g, len(self.levels)

    def contains(self, g: Permutation) -> bool:
        residue, _ = self.sift(g)
        return residue.is_identity()

    def verify(self, generators: Sequence[Permutation]) -> bool:
        """Check that every generator sifts to the identity."""
        return all(self.contains(g) for g in generators)


def schreier_sims(generators: Sequence[Permutation], degree: int) -> StabilizerChain:
    """Build a stabilizer chain without randomization.

    The base is the ascending list of points moved by the generators; levels
    with a trivial orbit are dropped at the end.
    """
    gens = [g for g in generators if not g.is_identity()]
    moved = sorted({p for g in gens for p in g.moved_points()})
    levels = [ChainLevel(base_point=b) for b in moved]
    chain = StabilizerChain(degree=degree, levels=levels)

    for g in gens:
        for i, level in enumerate(levels):
            level.generators.append(g)
            if g.images[level.base_point] != level.base_point:
                break
        else:  # pragma: no cover - moved points cover every generator
            raise AssertionError("generator fixes the full base")
    for level in levels:
        level.rebuild(degree)

    i = len(levels) - 1
    while i >= 0:
        level = levels[i]
        restart_at = None
        for beta in level.orbit:
            t_beta = level.transversal[beta]
            for s in level.generators:
                gamma = s.images[beta]
                schreier = t_beta * s * level.transversal[gamma].inverse()
                residue, stop = chain.sift(schreier, start=i + 1)
                if residue.is_identity():
                    continue
                if stop == len(levels):  # pragma: no cover - base is complete
                    raise AssertionError("residue fixes every base point")
                for j in range(i + 1, stop + 1):
                    levels[j].generators.append(residue)
                    levels[j].rebuild(degree)
                restart_at = stop
                break
            if restart_at is not None:
                break
        i = restart_at if restart_at is not None else i - 1

    chain.levels = [level for level in levels if len(level.orbit) > 1]
    log.debug(f"Stabilizer chain: base={[b + 1 for b in chain.base]} order={chain.order}")
    return chain
