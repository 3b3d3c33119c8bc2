"""Element index: a bijection between group elements and 0..|G|-1.

Subsets of the group are carried as Python ints used as bit masks over ranks,
so subgroup equality and containment are single integer operations.
"""

from __future__ import annotations

import threading
from collections.abc import Iterable, Sequence

from sublattice.core.config import settings
from sublattice.core.perm.chain import StabilizerChain
from sublattice.core.perm.permutation import Permutation
from sublattice.utils.error_handler import NotAMemberError
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


def mask_from_ids(ids: Iterable[int]) -> int:
    """Pack element ranks into a bit mask."""
    ids = list(ids)
    if not ids:
        return 0
    buf = bytearray(max(ids) // 8 + 1)
    for i in ids:
        buf[i >> 3] |= 1 << (i & 7)
    return int.from_bytes(buf, "little")


def ids_from_mask(mask: int) -> list[int]:
    """Ranks set in a bit mask, ascending."""
    if not mask:
        return []
    bits = bin(mask)[:1:-1]
    return [i for i, c in enumerate(bits) if c == "1"]


def popcount(mask: int) -> int:
    return mask.bit_count()


def is_submask(small: int, big: int) -> bool:
    return small & big == small


class ElementIndex:
    """Ranking of group elements through the chain's transversal decomposition.

    An element g decomposes as u_{k-1} ... u_1 u_0 with u_i taken from the
    transversal of level i; its rank is the mixed-radix number of the orbit
    positions, level 0 most significant. The identity has rank 0.
    """

    def __init__(self, chain: StabilizerChain):
        self.chain = chain
        self.degree = chain.degree
        self.order = chain.order
        self._radix = [len(level.orbit) for level in chain.levels]
        self._positions = [
            {point: pos for pos, point in enumerate(level.orbit)} for level in chain.levels
        ]
        self._weights = []
        weight = 1
        for r in reversed(self._radix):
            self._weights.append(weight)
            weight *= r
        self._weights.reverse()

        self._lock = threading.Lock()
        self._elements: list[Permutation] | None = None
        self._ranks: dict[tuple[int, ...], int] | None = None
        self._columns: dict[int, list[int]] = {}
        self._conj: dict[int, list[int]] = {}
        self._orders: list[int] | None = None
        self._inverses: list[int] | None = None
        self._tabulated = self.order <= settings.engine.table_limit

    # ------------------------------------------------------------------ bijection

    def unrank(self, i: int) -> Permutation:
        if not 0 <= i < self.order:
            raise IndexError(f"rank {i} outside 0..{self.order - 1}")
        g = Permutation.identity(self.degree)
        for level, weight, radix in zip(self.chain.levels, self._weights, self._radix, strict=True):
            digit = (i // weight) % radix
            g = level.transversal[level.orbit[digit]] * g
        return g

    def rank_by_sifting(self, g: Permutation) -> int:
        """Rank computed from the chain alone, without the element table."""
        rank = 0
        for level, positions, weight in zip(
            self.chain.levels, self._positions, self._weights, strict=True
        ):
            image = g.images[level.base_point]
            pos = positions.get(image)
            if pos is None:
                raise NotAMemberError(str(g))
            rank += pos * weight
            g = g * level.transversal[image].inverse()
        if not g.is_identity():
            raise NotAMemberError(str(g))
        return rank

    @property
    def elements(self) -> list[Permutation]:
        if self._elements is None:
            with self._lock:
                if self._elements is None:
                    elements = [self.unrank(i) for i in range(self.order)]
                    self._ranks = {g.images: i for i, g in enumerate(elements)}
                    self._elements = elements
                    log.debug(f"Element index materialized: {self.order} elements")
        return self._elements

    def rank(self, g: Permutation) -> int:
        if self._ranks is None:
            self.elements  # noqa: B018 - materializes the table
        assert self._ranks is not None
        try:
            return self._ranks[g.images]
        except KeyError:
            raise NotAMemberError(str(g)) from None

    def __contains__(self, g: Permutation) -> bool:
        try:
            self.rank(g)
        except NotAMemberError:
            return False
        return True

    # ------------------------------------------------------------------ arithmetic on ranks

    def right_column(self, j: int) -> list[int]:
        """Ranks of e_i * e_j for every i."""
        column = self._columns.get(j)
        if column is not None:
            return column
        elements = self.elements
        g = elements[j]
        column = [self.rank(x * g) for x in elements]
        if self._tabulated:
            self._columns[j] = column
        return column

    def mul(self, i: int, j: int) -> int:
        column = self._columns.get(j)
        if column is not None:
            return column[i]
        return self.rank(self.elements[i] * self.elements[j])

    def inverse(self, i: int) -> int:
        if self._inverses is None:
            self._inverses = [self.rank(g.inverse()) for g in self.elements]
        return self._inverses[i]

    def conjugation_map(self, x: int) -> list[int]:
        """Ranks of x⁻¹ e_i x for every i."""
        cmap = self._conj.get(x)
        if cmap is not None:
            return cmap
        g = self.elements[x]
        g_inv = g.inverse()
        cmap = [self.rank(g_inv * e * g) for e in self.elements]
        if self._tabulated:
            self._conj[x] = cmap
        return cmap

    def conjugate(self, i: int, x: int) -> int:
        """Rank of x⁻¹ e_i x."""
        if self._tabulated:
            return self.conjugation_map(x)[i]
        g = self.elements[x]
        return self.rank(g.inverse() * self.elements[i] * g)

    def element_order(self, i: int) -> int:
        if self._orders is None:
            self._orders = [g.order for g in self.elements]
        return self._orders[i]

    # ------------------------------------------------------------------ subsets

    def closure(self, generators: Iterable[int], seed: int = 1) -> int:
        """Mask of the subgroup generated by the given ranks.

        ``seed`` is a mask of elements already known to lie in the result (for
        instance a subgroup generated by a subset of ``generators``); it only
        shortens the search.
        """
        gens = [g for g in dict.fromkeys(generators) if g != 0]
        if not gens:
            return seed | 1
        queue = ids_from_mask(seed | 1)
        seen = bytearray(self.order)
        for i in queue:
            seen[i] = 1
        if self._tabulated:
            columns = [self.right_column(g) for g in gens]
            for i in queue:
                for column in columns:
                    j = column[i]
                    if not seen[j]:
                        seen[j] = 1
                        queue.append(j)
        else:
            elements = self.elements
            perms = [elements[g] for g in gens]
            for i in queue:
                x = elements[i]
                for g in perms:
                    j = self.rank(x * g)
                    if not seen[j]:
                        seen[j] = 1
                        queue.append(j)
        return mask_from_ids(queue)

    def closure_of(self, perms: Sequence[Permutation]) -> int:
        return self.closure(self.rank(g) for g in perms)

    def conjugate_mask(self, mask: int, x: int) -> int:
        """Mask of x⁻¹ U x for the subset U given by ``mask``."""
        if self._tabulated:
            cmap = self.conjugation_map(x)
            return mask_from_ids(cmap[i] for i in ids_from_mask(mask))
        g = self.elements[x]
        g_inv = g.inverse()
        return mask_from_ids(self.rank(g_inv * e * g) for e in self.permutations(mask))

    def product_mask(self, left: int, right_ranks: Iterable[int]) -> int:
        """Mask of {a * b : a in left, b in right_ranks}."""
        ids = ids_from_mask(left)
        out: set[int] = set()
        for b in right_ranks:
            if self._tabulated:
                column = self.right_column(b)
                out.update(column[a] for a in ids)
            else:
                g = self.elements[b]
                out.update(self.rank(self.elements[a] * g) for a in ids)
        return mask_from_ids(out)

    def permutations(self, mask: int) -> list[Permutation]:
        elements = self.elements
        return [elements[i] for i in ids_from_mask(mask)]
