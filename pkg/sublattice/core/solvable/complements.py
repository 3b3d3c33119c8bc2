"""Complements to an elementary abelian section N/B in A/B.

A subgroup S with B <= S, S ∩ N = B and SN = A is generated by B together with
one lift a_i * t_i per generator a_i of A modulo N, where t_i runs over coset
representatives of B in N. The lifts are searched by backtracking; partial
choices are cut as soon as the generated group meets N outside B or grows past
[A:N] * |B|.
"""

from __future__ import annotations

from collections.abc import Sequence

from sublattice.core.config import settings
from sublattice.core.perm.group import PermGroup, generator_ranks, is_normal_mask
from sublattice.core.perm.index import ElementIndex, ids_from_mask, popcount
from sublattice.utils.error_handler import ComplementSearchError, ValidationError
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


def _generators_modulo(index: ElementIndex, gens: Sequence[int], n_mask: int) -> list[int]:
    """A subset of ``gens`` generating the same group modulo N."""
    chosen: list[int] = []
    reached = n_mask
    for g in gens:
        if (reached >> g) & 1:
            continue
        chosen.append(g)
        reached = index.closure(chosen, seed=n_mask)
    return chosen


def _coset_lifts(index: ElementIndex, n_mask: int, b_mask: int) -> list[int]:
    """Minimal ranks of the cosets of B in N."""
    b_ids = ids_from_mask(b_mask)
    covered: set[int] = set()
    reps: list[int] = []
    for r in ids_from_mask(n_mask):
        if r in covered:
            continue
        reps.append(r)
        covered.update(index.mul(b, r) for b in b_ids)
    return reps


def complement_masks(
    index: ElementIndex,
    a_mask: int,
    a_gens: Sequence[int],
    n_mask: int,
    n_gens: Sequence[int],
    b_mask: int,
    b_gens: Sequence[int],
) -> list[tuple[int, list[int]]]:
    """Complements of N/B in A/B up to conjugation by N, as (mask, generator ranks).

    Raises ComplementSearchError when the lift search would exceed the
    configured bound.
    """
    if b_mask & n_mask != b_mask or n_mask & a_mask != n_mask:
        raise ValidationError("complement", "B", "expected B <= N <= A")
    if not is_normal_mask(index, n_mask, a_gens):
        raise ValidationError("complement", "N", "N is not normal in A")
    if not is_normal_mask(index, b_mask, a_gens):
        raise ValidationError("complement", "B", "B is not invariant under A")
    if n_mask == b_mask:
        return [(a_mask, list(a_gens))]

    top = _generators_modulo(index, a_gens, n_mask)
    lifts = _coset_lifts(index, n_mask, b_mask)
    size = len(lifts) ** len(top)
    limit = settings.engine.complement_search_limit
    if size > limit:
        raise ComplementSearchError(size, limit)

    target = popcount(a_mask) // popcount(n_mask) * popcount(b_mask)
    found: dict[int, list[int]] = {}

    def search(chosen: list[int], mask: int) -> None:
        k = len(chosen)
        if k == len(top):
            if popcount(mask) == target:
                found.setdefault(mask, [*b_gens, *chosen])
            return
        for t in lifts:
            g = index.mul(top[k], t)
            trial = [*chosen, g]
            new_mask = index.closure(trial, seed=mask)
            if new_mask & n_mask != b_mask or popcount(new_mask) > target:
                continue
            search(trial, new_mask)

    search([], b_mask)

    # N permutes the complements; keep the first of each orbit
    reps: list[tuple[int, list[int]]] = []
    covered: set[int] = set()
    for mask in sorted(found, key=ids_from_mask):
        if mask in covered:
            continue
        reps.append((mask, found[mask]))
        orbit = [mask]
        covered.add(mask)
        for m in orbit:
            for x in n_gens:
                image = index.conjugate_mask(m, x)
                if image not in covered:
                    covered.add(image)
                    orbit.append(image)
    log.debug(
        f"{len(found)} complements of a section of order {popcount(n_mask) // popcount(b_mask)}"
        f" in {len(reps)} classes under N"
    )
    return reps


def complements_in_layer(
    A: PermGroup, N: PermGroup, B: PermGroup, ambient: PermGroup
) -> list[PermGroup]:
    """Complements S (full preimages over B) of N/B in A/B, one per N-class.

    Args:
        A: the group being complemented in, with B <= N <= A
        N: upper term of an elementary abelian layer, normal in A
        B: lower term of the layer, normal in A
        ambient: a group containing all three, whose index is used

    Returns:
        Subgroups S with S N = A and S ∩ N = B. The list is empty when the
        layer does not split.

    Raises:
        ComplementSearchError: the coset search exceeds
            ``engine.complement_search_limit``
    """
    index = ambient.index
    reps = complement_masks(
        index,
        A.mask_in(ambient),
        generator_ranks(A, index),
        N.mask_in(ambient),
        generator_ranks(N, index),
        B.mask_in(ambient),
        generator_ranks(B, index),
    )
    if len(reps) == 1 and reps[0][0] == A.mask_in(ambient):
        return [A]
    return [PermGroup.from_ranks(index, gens) for _, gens in reps]
