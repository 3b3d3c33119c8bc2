"""Factor groups A/D as coset tables, and isomorphisms between them."""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from sublattice.core.config import settings
from sublattice.core.perm.group import PermGroup, generator_ranks
from sublattice.core.perm.index import ElementIndex, ids_from_mask, popcount
from sublattice.utils.error_handler import GroupTooLargeError
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


class FactorGroup:
    """The factor group A/D of subgroups D ◁ A inside an element index.

    Cosets are numbered by their minimal rank; coset 0 is D itself.
    """

    def __init__(self, index: ElementIndex, a_mask: int, d_mask: int, a_gens: Sequence[int]):
        order = popcount(a_mask) // popcount(d_mask)
        limit = settings.engine.isomorphism_limit
        if order > limit:
            raise GroupTooLargeError(order, limit, "isomorphism limit")
        self.index = index
        self.a_mask = a_mask
        self.d_mask = d_mask

        d_ids = ids_from_mask(d_mask)
        coset_of: dict[int, int] = {}
        reps: list[int] = []
        for r in ids_from_mask(a_mask):
            if r in coset_of:
                continue
            c = len(reps)
            reps.append(r)
            for d in d_ids:
                coset_of[index.mul(d, r)] = c
        self.reps = reps
        self.coset_of = coset_of
        self.order = len(reps)
        self.table = [[coset_of[index.mul(x, y)] for y in reps] for x in reps]

        self.inverses = [row.index(0) for row in self.table]
        self.orders = [self._element_order(c) for c in range(self.order)]
        self.class_sizes = self._class_sizes()

        gens: list[int] = []
        reached = 1
        for g in a_gens:
            c = coset_of[g]
            if not (reached >> c) & 1:
                gens.append(c)
                reached = self._closure(gens)
        self.generators = gens

    @classmethod
    def of_group(cls, G: PermGroup) -> FactorGroup:
        index = G.index
        return cls(index, (1 << index.order) - 1, 1, generator_ranks(G, index))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def _element_order(self, c: int) -> int:
        n, x = 1, c
        while x != 0:
            x = self.table[x][c]
            n += 1
        return n

    def _class_sizes(self) -> list[int]:
        sizes = [0] * self.order
        for c in range(self.order):
            conjugates = {self.table[self.table[self.inverses[x]][c]][x] for x in range(self.order)}
            sizes[c] = len(conjugates)
        return sizes

    def _closure(self, gens: Sequence[int]) -> int:
        seen = {0}
        queue = [0]
        for x in queue:
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sum(1 << c for c in seen)

    @property
    def profile(self) -> Counter[tuple[int, int]]:
        """Multiset of (element order, class size)."""
        return Counter(zip(self.orders, self.class_sizes, strict=True))

    def __repr__(self) -> str:
        return f"FactorGroup(order={self.order}, generators={len(self.generators)})"


@dataclass(frozen=True, eq=False)
class Isomorphism:
    """A bijective homomorphism between factor groups, given on all cosets."""

    source: FactorGroup
    target: FactorGroup
    generators: tuple[int, ...]
    images: tuple[int, ...]
    mapping: tuple[int, ...]

    def __call__(self, coset: int) -> int:
        return self.mapping[coset]


def _extend(
    source: FactorGroup, target: FactorGroup, gens: Sequence[int], images: Sequence[int]
) -> dict[int, int] | None:
    """The homomorphism on <gens> sending gens to images, if it exists and is injective."""
    mapping = {0: 0}
    queue = [0]
    for x in queue:
        fx = mapping[x]
        for g, img in zip(gens, images, strict=True):
            y = source.mul(x, g)
            fy = target.mul(fx, img)
            known = mapping.get(y)
            if known is None:
                mapping[y] = fy
                queue.append(y)
            elif known != fy:
                return None
    if len(set(mapping.values())) != len(mapping):
        return None
    return mapping


def _as_factor(Q: FactorGroup | PermGroup) -> FactorGroup:
    return Q if isinstance(Q, FactorGroup) else FactorGroup.of_group(Q)


def isomorphisms(Q1: FactorGroup | PermGroup, Q2: FactorGroup | PermGroup) -> list[Isomorphism]:
    """Every isomorphism Q1 -> Q2, by backtracking over generator images."""
    source, target = _as_factor(Q1), _as_factor(Q2)
    if source.order != target.order or source.profile != target.profile:
        return []
    gens = source.generators
    candidates = [
        [
            c
            for c in range(target.order)
            if target.orders[c] == source.orders[g]
            and target.class_sizes[c] == source.class_sizes[g]
        ]
        for g in gens
    ]

    found: list[Isomorphism] = []

    def backtrack(images: list[int]) -> None:
        k = len(images)
        if k == len(gens):
            mapping = _extend(source, target, gens, images)
            if mapping is not None and len(mapping) == source.order:
                found.append(
                    Isomorphism(
                        source,
                        target,
                        tuple(gens),
                        tuple(images),
                        tuple(mapping[c] for c in range(source.order)),
                    )
                )
            return
        for c in candidates[k]:
            trial = [*images, c]
            if _extend(source, target, gens[: k + 1], trial) is not None:
                backtrack(trial)

    backtrack([])
    log.debug(f"{len(found)} isomorphisms between groups of order {source.order}")
    return found
