"""Zuppos (cyclic subgroups of prime-power order) and bit-list subgroup signatures.

Every subgroup is generated by the zuppos it contains, so the set of contained
zuppos identifies a subgroup of the ambient group exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from sympy import factorint

from sublattice.core.perm.group import PermGroup
from sublattice.core.perm.index import ElementIndex, ids_from_mask, is_submask, mask_from_ids
from sublattice.core.perm.permutation import Permutation
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


@dataclass(frozen=True)
class Zuppo:
    """A cyclic subgroup of prime-power order > 1.

    Attributes:
        generator: minimal-rank generator of the cyclic subgroup
        order: p^k
        prime: p
        rank: element rank of the generator
        mask: element mask of the cyclic subgroup
    """

    generator: Permutation
    order: int
    prime: int
    rank: int
    mask: int

    @property
    def element_ids(self) -> frozenset[int]:
        return frozenset(ids_from_mask(self.mask))


@dataclass(frozen=True)
class ZuppoSignature:
    """Bit i is set iff zuppo i lies in the subgroup."""

    bits: int
    length: int

    def __contains__(self, i: int) -> bool:
        return bool((self.bits >> i) & 1)

    def count(self) -> int:
        return self.bits.bit_count()

    def issubset(self, other: ZuppoSignature) -> bool:
        return is_submask(self.bits, other.bits)

    @property
    def key(self) -> str:
        """Bit string read from zuppo 0 upward; compared lexicographically."""
        return format(self.bits, f"0{self.length}b")[::-1] if self.length else ""

    def __str__(self) -> str:
        return self.key


class ZuppoTable:
    """The zuppos of a group together with signature arithmetic over them."""

    def __init__(self, group: PermGroup):
        self.group = group
        self.index: ElementIndex = group.index
        self.zuppos, cyclic_of = _enumerate_zuppos(self.index)
        self._position = {z.mask: i for i, z in enumerate(self.zuppos)}
        # every element of prime-power order -> position of the zuppo it generates
        self._zuppo_of = {r: self._position[m] for r, m in cyclic_of.items()}
        self._permutations: dict[int, list[int]] = {}
        log.debug(f"{len(self.zuppos)} zuppos in a group of order {self.index.order}")

    def __len__(self) -> int:
        return len(self.zuppos)

    @cached_property
    def full(self) -> ZuppoSignature:
        return ZuppoSignature((1 << len(self.zuppos)) - 1, len(self.zuppos))

    def signature_of_mask(self, mask: int) -> ZuppoSignature:
        """A zuppo lies in a subgroup iff one of its generators does."""
        bits = 0
        zuppo_of = self._zuppo_of
        for i in ids_from_mask(mask):
            z = zuppo_of.get(i)
            if z is not None:
                bits |= 1 << z
        return ZuppoSignature(bits, len(self.zuppos))

    def zuppo_permutation(self, x: int) -> list[int]:
        """Image position of each zuppo under conjugation by the element of rank x."""
        perm = self._permutations.get(x)
        if perm is None:
            perm = [
                self._position[self.index.conjugate_mask(z.mask, x)] for z in self.zuppos
            ]
            self._permutations[x] = perm
        return perm

    def conjugate(self, sig: ZuppoSignature, x: int) -> ZuppoSignature:
        perm = self.zuppo_permutation(x)
        bits = 0
        for i in ids_from_mask(sig.bits):
            bits |= 1 << perm[i]
        return ZuppoSignature(bits, sig.length)

    def mask_of(self, sig: ZuppoSignature) -> int:
        """Element mask of the subgroup with this signature."""
        gens = [self.zuppos[i].rank for i in ids_from_mask(sig.bits)]
        return self.index.closure(gens)


def _prime_power(n: int) -> int | None:
    """The prime p when n = p^k with k >= 1."""
    factors = factorint(n)
    if len(factors) != 1:
        return None
    return next(iter(factors))


def _enumerate_zuppos(index: ElementIndex) -> tuple[list[Zuppo], dict[int, int]]:
    """Zuppos sorted by (order, generator rank), and element rank -> zuppo mask."""
    primes: dict[int, int | None] = {}
    cyclic_of: dict[int, int] = {}
    found: list[Zuppo] = []
    for r in range(1, index.order):
        if r in cyclic_of:
            continue
        order = index.element_order(r)
        if order not in primes:
            primes[order] = _prime_power(order)
        p = primes[order]
        if p is None:
            continue
        powers = [0, r]
        current = index.mul(r, r)
        while current != 0:
            powers.append(current)
            current = index.mul(current, r)
        mask = mask_from_ids(powers)
        for k, g in enumerate(powers):
            if k % p:
                cyclic_of[g] = mask
        found.append(Zuppo(index.elements[r], order, p, r, mask))
    found.sort(key=lambda z: (z.order, z.rank))
    return found, cyclic_of


def compute_zuppos(G: PermGroup) -> list[Zuppo]:
    return list(ZuppoTable(G).zuppos)


def signature(U: PermGroup, table: ZuppoTable) -> ZuppoSignature:
    """Signature of a subgroup of the table's group."""
    return table.signature_of_mask(U.mask_in(table.group))


def conjugate_signature(
    sig: ZuppoSignature, x: Permutation, table: ZuppoTable
) -> ZuppoSignature:
    return table.conjugate(sig, table.index.rank(x))
