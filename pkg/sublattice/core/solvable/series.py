"""Normal series with elementary abelian factors for solvable groups."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from sympy import factorint

from sublattice.core.perm.group import PermGroup, derived_in, generator_ranks
from sublattice.core.perm.index import ElementIndex, popcount
from sublattice.utils.error_handler import NotSolvableError
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


@dataclass
class SeriesTerm:
    mask: int
    generators: list[int]

    @property
    def order(self) -> int:
        return popcount(self.mask)


@dataclass
class ElementaryAbelianSeries:
    """G = R_0 > R_1 > ... > R_k = 1, every R_i normal in G and every factor (C_p)^r."""

    group: PermGroup
    terms: list[SeriesTerm]
    primes: list[int] = field(default_factory=list)
    ranks: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.primes)

    @property
    def groups(self) -> list[PermGroup]:
        index = self.group.index
        return [PermGroup.from_ranks(index, t.generators) for t in self.terms]

    @property
    def factor_orders(self) -> list[int]:
        return [p**r for p, r in zip(self.primes, self.ranks, strict=True)]


def _power(index: ElementIndex, r: int, e: int) -> int:
    result, base = 0, r
    while e:
        if e & 1:
            result = index.mul(result, base)
        base = index.mul(base, base)
        e >>= 1
    return result


def _verbal(
    index: ElementIndex, lower: SeriesTerm, gens: Sequence[int], exponent: int
) -> SeriesTerm:
    """<lower, x^exponent : x in gens>."""
    new_gens = list(lower.generators)
    for x in gens:
        y = _power(index, x, exponent)
        if not (lower.mask >> y) & 1:
            new_gens.append(y)
    return SeriesTerm(index.closure(new_gens, seed=lower.mask), new_gens)


def _refine_abelian(index: ElementIndex, upper: SeriesTerm, lower: SeriesTerm) -> list[SeriesTerm]:
    """Terms strictly between ``upper`` and ``lower`` (abelian factor) plus ``lower``.

    First the Sylow parts of the factor are split off one prime at a time,
    then each p-part is cut by its p-power layers.
    """
    factorization = sorted(factorint(upper.order // lower.order).items())
    out: list[SeriesTerm] = []
    hall_top = upper
    q = 1
    for i, (p, e) in enumerate(factorization):
        q *= p**e
        last = i == len(factorization) - 1
        hall_bottom = lower if last else _verbal(index, lower, upper.generators, q)
        # p-power layers of the p-part hall_top / hall_bottom
        current = hall_top
        exponent = p
        while current.mask != hall_bottom.mask:
            nxt = _verbal(index, hall_bottom, hall_top.generators, exponent)
            out.append(nxt)
            current = nxt
            exponent *= p
        hall_top = hall_bottom
    return out


def elementary_abelian_series(G: PermGroup) -> ElementaryAbelianSeries:
    """Derived series of G refined to elementary abelian factors.

    Args:
        G: the group

    Returns:
        Terms from G down to the trivial group, each normal in G with an
        elementary abelian factor over the next.

    Raises:
        NotSolvableError: the derived series stops above the trivial group
    """
    index = G.index
    top = SeriesTerm(index.closure(generator_ranks(G, index)), generator_ranks(G, index))
    derived = [top]
    while derived[-1].mask != 1:
        mask, gens = derived_in(index, derived[-1].generators)
        if mask == derived[-1].mask:
            raise NotSolvableError(index.order)
        derived.append(SeriesTerm(mask, gens))

    terms = [top]
    for upper, lower in zip(derived, derived[1:], strict=False):
        terms.extend(_refine_abelian(index, upper, lower))

    primes: list[int] = []
    ranks: list[int] = []
    for upper, lower in zip(terms, terms[1:], strict=False):
        ((p, r),) = factorint(upper.order // lower.order).items()
        primes.append(p)
        ranks.append(r)
    log.debug(
        "Elementary abelian series with factors "
        + ", ".join(f"{p}^{r}" for p, r in zip(primes, ranks, strict=True))
    )
    return ElementaryAbelianSeries(G, terms, primes, ranks)
