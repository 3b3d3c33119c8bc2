"""GF(p) modules from elementary abelian layers, and their submodules.

A layer N/M is written additively on a basis b_1..b_r of coset representatives;
the vector v stands for the coset M * b_1^v_1 * ... * b_r^v_r. Vectors are rows
and act on the right: v -> v @ X for the matrix X of a group element, so that
X(x) @ X(y) = X(xy) for conjugation x⁻¹ . x.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from sympy import factorint

from sublattice.core.perm.group import PermGroup, generator_ranks, is_normal_mask
from sublattice.core.perm.index import ElementIndex, ids_from_mask, popcount
from sublattice.core.perm.permutation import Permutation
from sublattice.utils.error_handler import ValidationError
from sublattice.utils.logger import get_logger

log = get_logger(__name__)

# A subspace in reduced row-echelon form, rows as tuples.
Subspace = tuple[tuple[int, ...], ...]


def row_echelon(rows: np.ndarray, p: int) -> np.ndarray:
    """Reduced row-echelon form over GF(p), zero rows dropped."""
    R = np.asarray(rows, dtype=np.int64) % p
    if R.ndim != 2 or R.shape[0] == 0:
        return R.reshape(0, R.shape[-1] if R.ndim == 2 else 0)
    m, n = R.shape
    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        nonzero = np.nonzero(R[pivot_row:, col])[0]
        if nonzero.size == 0:
            continue
        found = pivot_row + int(nonzero[0])
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        inv = pow(int(R[pivot_row, col]), -1, p)
        R[pivot_row] = (R[pivot_row] * inv) % p
        for row in range(m):
            if row != pivot_row and R[row, col]:
                R[row] = (R[row] - R[row, col] * R[pivot_row]) % p
        pivot_row += 1
    return R[:pivot_row]


def as_subspace(rows: np.ndarray, p: int) -> Subspace:
    return tuple(tuple(int(x) for x in row) for row in row_echelon(rows, p))


@dataclass(frozen=True, eq=False)
class LayerModule:
    """The conjugation action of a group A on an elementary abelian layer N/M.

    Attributes:
        prime: p
        rank: r, with |N/M| = p^r
        basis: coset representatives b_1..b_r of M in N
        matrices: r x r matrices over GF(p), one per acting generator
        acting: ranks of the acting generators
    """

    prime: int
    rank: int
    basis: tuple[Permutation, ...]
    matrices: tuple[np.ndarray, ...]
    acting: tuple[int, ...]
    index: ElementIndex = field(repr=False)
    basis_ranks: tuple[int, ...] = field(repr=False)
    lower_mask: int = field(repr=False)
    lower_generators: tuple[int, ...] = field(repr=False)
    coordinates: dict[int, tuple[int, ...]] = field(repr=False)

    def vector_of(self, r: int) -> np.ndarray:
        """Coordinates of the element of rank r (which must lie in N)."""
        return np.array(self.coordinates[r], dtype=np.int64)

    def element_of(self, v: Sequence[int]) -> int:
        """Rank of b_1^v_1 * ... * b_r^v_r."""
        result = 0
        for b, e in zip(self.basis_ranks, v, strict=True):
            for _ in range(int(e) % self.prime):
                result = self.index.mul(result, b)
        return result

    def subgroup_of(self, subspace: Subspace) -> tuple[int, list[int]]:
        """Mask and generator ranks of the preimage of a subspace in N."""
        gens = list(self.lower_generators) + [self.element_of(row) for row in subspace]
        return self.index.closure(gens, seed=self.lower_mask), gens

    def action(self, r: int) -> np.ndarray:
        """Matrix of the element of rank r of A, computed directly."""
        return _action_matrix(self.index, self.basis_ranks, self.coordinates, r)


def _action_matrix(
    index: ElementIndex,
    basis: Sequence[int],
    coordinates: dict[int, tuple[int, ...]],
    r: int,
) -> np.ndarray:
    rows = [coordinates[index.conjugate(b, r)] for b in basis]
    return np.array(rows, dtype=np.int64).reshape(len(basis), len(basis))


def build_layer_module(
    index: ElementIndex,
    acting: Sequence[int],
    n_mask: int,
    n_gens: Sequence[int],
    m_mask: int,
    m_gens: Sequence[int],
) -> LayerModule:
    """The module N/M under conjugation by <acting>.

    Args:
        index: element index holding every subgroup involved
        acting: ranks of the acting group
        n_mask: upper term N
        n_gens: generator ranks of N
        m_mask: lower term M, contained in N
        m_gens: generator ranks of M

    Returns:
        The layer as a GF(p) module, with one action matrix per acting
        generator.

    Raises:
        ValidationError: M is not in N, or a term is not normalized by <acting>,
            or N/M is not elementary abelian
    """
    if m_mask & n_mask != m_mask:
        raise ValidationError("layer", "M", "lower term is not contained in the upper term")
    if not is_normal_mask(index, m_mask, acting) or not is_normal_mask(index, n_mask, acting):
        raise ValidationError("layer", "M", "layer terms are not normal in the acting group")
    size = popcount(n_mask) // popcount(m_mask)
    factors = factorint(size)
    if size == 1:
        p, rank = 2, 0
    elif len(factors) == 1:
        ((p, rank),) = factors.items()
    else:
        raise ValidationError("layer", size, "factor is not elementary abelian")

    for i, a in enumerate(n_gens):
        for b in n_gens[i + 1 :]:
            if not (m_mask >> _commutator(index, a, b)) & 1:
                raise ValidationError("layer", size, "factor is not abelian")

    # greedy basis from the generators of N; coordinates of every element of N
    coordinates: dict[int, tuple[int, ...]] = {i: () for i in ids_from_mask(m_mask)}
    basis: list[int] = []
    for y in n_gens:
        if y in coordinates:
            continue
        if not (m_mask >> _power(index, y, p)) & 1:
            raise ValidationError("layer", size, "factor is not elementary abelian")
        old = list(coordinates.items())
        coordinates = {i: (*v, 0) for i, v in old}
        for k in range(1, p):
            yk = _power(index, y, k)
            for i, v in old:
                coordinates[index.mul(i, yk)] = (*v, k)
        basis.append(y)
    if len(basis) != rank or len(coordinates) != popcount(n_mask):
        raise ValidationError("layer", size, "factor is not elementary abelian")

    return LayerModule(
        prime=p,
        rank=rank,
        basis=tuple(index.elements[b] for b in basis),
        matrices=tuple(_action_matrix(index, basis, coordinates, x) for x in acting),
        acting=tuple(acting),
        index=index,
        basis_ranks=tuple(basis),
        lower_mask=m_mask,
        lower_generators=tuple(m_gens),
        coordinates=coordinates,
    )


def _power(index: ElementIndex, r: int, e: int) -> int:
    result = 0
    for _ in range(e):
        result = index.mul(result, r)
    return result


def _commutator(index: ElementIndex, a: int, b: int) -> int:
    """Rank of a⁻¹b⁻¹ab."""
    return index.mul(index.mul(index.inverse(a), index.inverse(b)), index.mul(a, b))


def layer_module(A: PermGroup, N: PermGroup, M: PermGroup, ambient: PermGroup) -> LayerModule:
    """Module N/M under A, with all three given as subgroups of ``ambient``."""
    index = ambient.index
    return build_layer_module(
        index,
        generator_ranks(A, index),
        N.mask_in(ambient),
        generator_ranks(N, index),
        M.mask_in(ambient),
        generator_ranks(M, index),
    )


def spin(vector: np.ndarray, matrices: Sequence[np.ndarray], p: int) -> Subspace:
    """Smallest invariant subspace containing ``vector``."""
    rows = [np.asarray(vector, dtype=np.int64) % p]
    span = row_echelon(np.array(rows), p)
    queue = list(rows)
    while queue:
        v = queue.pop()
        for X in matrices:
            w = (v @ X) % p
            extended = row_echelon(np.vstack([span, w]), p)
            if extended.shape[0] > span.shape[0]:
                span = extended
                queue.append(w)
    return as_subspace(span, p)


def submodules(module: LayerModule) -> list[Subspace]:
    """Every invariant subspace: spun cyclic submodules closed under sums."""
    p, r = module.prime, module.rank
    zero: Subspace = ()
    found: set[Subspace] = {zero}
    if r == 0:
        return [zero]
    for v in itertools.product(range(p), repeat=r):
        if any(v):
            found.add(spin(np.array(v), module.matrices, p))
    cyclic = [s for s in found if s]
    frontier = list(cyclic)
    while frontier:
        new: list[Subspace] = []
        for U in frontier:
            for C in cyclic:
                W = as_subspace(np.array(U + C, dtype=np.int64).reshape(-1, r), p)
                if W not in found:
                    found.add(W)
                    new.append(W)
        frontier = new
    out = sorted(found, key=lambda s: (len(s), s))
    log.debug(f"{len(out)} submodules of a module of rank {r} over GF({p})")
    return out
