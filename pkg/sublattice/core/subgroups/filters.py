"""Lattice filters and the registry of named subgroup predicates."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from pydantic import BaseModel, Field
from sympy import isprime

from sublattice.core.perm.group import derived_in, perfect_core_in
from sublattice.core.perm.index import ElementIndex, ids_from_mask, popcount
from sublattice.utils.error_handler import FilterError
from sublattice.utils.logger import get_logger

log = get_logger(__name__)

# (index, subgroup mask, subgroup generator ranks) -> accepted
PredicateTest = Callable[[ElementIndex, int, Sequence[int]], bool]

# Order of the smallest non-trivial perfect group (A5).
SMALLEST_PERFECT_ORDER = 60


@dataclass(frozen=True)
class SubgroupPredicate:
    """A named property of subgroups.

    Attributes:
        name: registry key, including any argument (``p-group:3``)
        description: one-line summary for listings
        test: the property itself
        downward_closed: every subgroup of an accepted subgroup is accepted
        admits_perfect: some non-trivial perfect group is accepted
    """

    name: str
    description: str
    test: PredicateTest
    downward_closed: bool = True
    admits_perfect: bool = False


def _is_p_group(p: int) -> PredicateTest:
    def test(index: ElementIndex, mask: int, gens: Sequence[int]) -> bool:
        n = popcount(mask)
        while n % p == 0:
            n //= p
        return n == 1

    return test


def _is_abelian(index: ElementIndex, mask: int, gens: Sequence[int]) -> bool:
    return all(
        index.mul(a, b) == index.mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :]
    )


def _is_cyclic(index: ElementIndex, mask: int, gens: Sequence[int]) -> bool:
    n = popcount(mask)
    return n == 1 or any(index.element_order(i) == n for i in ids_from_mask(mask))


def _is_solvable(index: ElementIndex, mask: int, gens: Sequence[int]) -> bool:
    core, _ = perfect_core_in(index, gens)
    return core == 1


def _is_perfect(index: ElementIndex, mask: int, gens: Sequence[int]) -> bool:
    derived, _ = derived_in(index, gens)
    return derived == mask


class PredicateRegistry:
    """Registry of subgroup predicates.

    Plain predicates are stored by name; parametrised ones (``p-group:<p>``)
    by a factory that builds the predicate from its argument.
    """

    def __init__(self) -> None:
        self._predicates: dict[str, SubgroupPredicate] = {}
        self._factories: dict[str, tuple[str, Callable[[str], SubgroupPredicate]]] = {}

    def register(self, predicate: SubgroupPredicate) -> None:
        self._predicates[predicate.name] = predicate
        log.debug(f"Registered predicate: {predicate.name}")

    def register_family(
        self, name: str, description: str, factory: Callable[[str], SubgroupPredicate]
    ) -> None:
        self._factories[name] = (description, factory)
        log.debug(f"Registered predicate family: {name}")

    def get(self, predicate_id: str) -> SubgroupPredicate:
        key = predicate_id.strip().lower()
        if key in self._predicates:
            return self._predicates[key]
        name, _, argument = key.partition(":")
        if name in self._factories and argument:
            return self._factories[name][1](argument)
        raise FilterError(predicate_id, "unknown predicate")

    def list_predicates(self) -> list[dict[str, str]]:
        rows = [
            {"name": p.name, "description": p.description} for p in self._predicates.values()
        ]
        rows += [
            {"name": f"{name}:<arg>", "description": description}
            for name, (description, _) in self._factories.items()
        ]
        return sorted(rows, key=lambda r: r["name"])


def _p_group_predicate(argument: str) -> SubgroupPredicate:
    try:
        p = int(argument)
    except ValueError:
        raise FilterError(f"p-group:{argument}", "argument must be a prime") from None
    if not isprime(p):
        raise FilterError(f"p-group:{argument}", "argument must be a prime")
    return SubgroupPredicate(f"p-group:{p}", f"order is a power of {p}", _is_p_group(p))


registry = PredicateRegistry()
registry.register(SubgroupPredicate("abelian", "generators commute", _is_abelian))
registry.register(SubgroupPredicate("cyclic", "generated by one element", _is_cyclic))
registry.register(SubgroupPredicate("solvable", "derived series reaches 1", _is_solvable))
registry.register(
    SubgroupPredicate(
        "perfect",
        "equal to its derived subgroup",
        _is_perfect,
        downward_closed=False,
        admits_perfect=True,
    )
)
registry.register_family("p-group", "order is a power of the prime p", _p_group_predicate)


class LatticeFilter(BaseModel):
    """Restriction of a lattice computation to a downward-closed family."""

    max_order: int | None = Field(default=None, ge=1, description="Largest subgroup order kept")
    order_divides: int | None = Field(
        default=None, ge=1, description="Kept subgroup orders divide this number"
    )
    predicate_id: str | None = Field(default=None, description="Registered predicate name")

    def predicate(self) -> SubgroupPredicate | None:
        """The resolved predicate; only downward-closed predicates are usable."""
        if self.predicate_id is None:
            return None
        predicate = registry.get(self.predicate_id)
        if not predicate.downward_closed:
            raise FilterError(predicate.name, "predicate is not inherited by subgroups")
        return predicate

    def is_trivial(self) -> bool:
        return self.max_order is None and self.order_divides is None and self.predicate_id is None

    def accepts_order(self, order: int) -> bool:
        if self.max_order is not None and order > self.max_order:
            return False
        return self.order_divides is None or self.order_divides % order == 0

    def accepts(self, index: ElementIndex, mask: int, gens: Sequence[int]) -> bool:
        if not self.accepts_order(popcount(mask)):
            return False
        predicate = self.predicate()
        return predicate is None or predicate.test(index, mask, gens)

    def admits_perfect(self) -> bool:
        """Whether a non-trivial perfect subgroup can pass the filter."""
        if self.max_order is not None and self.max_order < SMALLEST_PERFECT_ORDER:
            return False
        if self.order_divides is not None and self.order_divides < SMALLEST_PERFECT_ORDER:
            return False
        predicate = self.predicate()
        return predicate is None or predicate.admits_perfect
