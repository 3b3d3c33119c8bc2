"""Named permutation groups used by the CLI ``--group`` option and the tests."""

from __future__ import annotations

import itertools
import re
from collections.abc import Callable

from sympy import isprime

from sublattice.core.perm.group import PermGroup
from sublattice.core.perm.permutation import Permutation
from sublattice.utils.error_handler import ValidationError


def _cycle(degree: int, *points: int) -> Permutation:
    return Permutation.from_cycles(degree, [points])


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValidationError("n", n, "must be positive")
    gens = [_cycle(n, *range(1, n + 1))] if n > 1 else []
    return PermGroup(gens, n, name=f"C{n}")


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n."""
    if n < 2:
        raise ValidationError("n", n, "dihedral groups need at least 2 vertices")
    if n == 2:
        gens = [_cycle(4, 1, 2), _cycle(4, 3, 4)]
        return PermGroup(gens, 4, name="D4")
    rotation = _cycle(n, *range(1, n + 1))
    reflection = Permutation.from_images([n + 1 - i for i in range(1, n + 1)])
    return PermGroup([rotation, reflection], n, name=f"D{2 * n}")


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValidationError("n", n, "must be positive")
    if n == 1:
        return PermGroup([], 1, name="S1")
    if n == 2:
        return PermGroup([_cycle(2, 1, 2)], 2, name="S2")
    return PermGroup([_cycle(n, *range(1, n + 1)), _cycle(n, 1, 2)], n, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise ValidationError("n", n, "must be positive")
    if n < 3:
        return PermGroup([], n, name=f"A{n}")
    if n == 3:
        return PermGroup([_cycle(3, 1, 2, 3)], 3, name="A3")
    long_cycle = range(1, n + 1) if n % 2 else range(2, n + 1)
    return PermGroup([_cycle(n, 1, 2, 3), _cycle(n, *long_cycle)], n, name=f"A{n}")


def quaternion() -> PermGroup:
    """Q8 in its regular representation on 8 points."""
    gens = [
        Permutation.parse("(1,2,4,7)(3,6,8,5)", 8),
        Permutation.parse("(1,3,4,8)(2,5,7,6)", 8),
    ]
    return PermGroup(gens, 8, name="Q8")


def special_linear_2_3() -> PermGroup:
    """SL(2,3) acting on the 8 non-zero vectors of GF(3)^2 (row vectors, right action)."""
    vectors = [v for v in itertools.product(range(3), repeat=2) if any(v)]
    position = {v: i for i, v in enumerate(vectors)}

    def as_permutation(m: tuple[tuple[int, int], tuple[int, int]]) -> Permutation:
        images = []
        for a, b in vectors:
            image = ((a * m[0][0] + b * m[1][0]) % 3, (a * m[0][1] + b * m[1][1]) % 3)
            images.append(position[image])
        return Permutation(tuple(images))

    gens = [as_permutation(((1, 1), (0, 1))), as_permutation(((0, 2), (1, 0)))]
    return PermGroup(gens, 8, name="SL(2,3)")


def dicyclic_12() -> PermGroup:
    """C3 ⋊ C4 on 7 points."""
    return PermGroup(
        [Permutation.parse("(1,2,3)", 7), Permutation.parse("(2,3)(4,5,6,7)", 7)], 7, name="C3:C4"
    )


def frobenius_20() -> PermGroup:
    """C5 ⋊ C4, the affine maps x -> ax + b of GF(5)."""
    return PermGroup(
        [Permutation.parse("(1,2,3,4,5)", 5), Permutation.parse("(2,3,5,4)", 5)], 5, name="C5:C4"
    )


def elementary_abelian(p: int, r: int) -> PermGroup:
    """(C_p)^r as r disjoint p-cycles."""
    if not isprime(p):
        raise ValidationError("p", p, "must be prime")
    if r < 0:
        raise ValidationError("r", r, "must be non-negative")
    degree = max(p * r, 1)
    gens = [_cycle(degree, *range(i * p + 1, (i + 1) * p + 1)) for i in range(r)]
    return PermGroup(gens, degree, name=f"C{p}^{r}")


_FIXED: dict[str, Callable[[], PermGroup]] = {
    "Q8": quaternion,
    "SL(2,3)": special_linear_2_3,
    "C3:C4": dicyclic_12,
    "C5:C4": frobenius_20,
}

_FAMILIES: list[tuple[re.Pattern[str], Callable[[re.Match[str]], PermGroup]]] = [
    (re.compile(r"C(\d+)\^(\d+)"), lambda m: elementary_abelian(int(m[1]), int(m[2]))),
    (re.compile(r"C(\d+)"), lambda m: cyclic(int(m[1]))),
    (re.compile(r"S(\d+)"), lambda m: symmetric(int(m[1]))),
    (re.compile(r"A(\d+)"), lambda m: alternating(int(m[1]))),
    (re.compile(r"D(\d+)"), lambda m: _dihedral_of_order(int(m[1]))),
]


def _dihedral_of_order(order: int) -> PermGroup:
    if order < 4 or order % 2:
        raise ValidationError("group", f"D{order}", "dihedral order must be even and at least 4")
    return dihedral(order // 2)


def group_by_name(name: str) -> PermGroup:
    """Resolve a catalog name such as ``S4``, ``C2^3``, ``SL(2,3)`` or ``S3xS3``."""
    key = name.replace(" ", "")
    factors = key.split("x")
    if len(factors) > 1:
        from sublattice.core.goursat.product import direct_product

        groups = [group_by_name(f) for f in factors]
        product = groups[0]
        for other in groups[1:]:
            product = direct_product(product, other).group
        return PermGroup(product.generators, product.degree, name=key)

    key = key.upper()
    if key in _FIXED:
        return _FIXED[key]()
    for pattern, build in _FAMILIES:
        match = pattern.fullmatch(key)
        if match:
            return build(match)
    raise ValidationError("group", name, "unknown catalog name")


CATALOG_NAMES = [
    "C6", "S3", "D8", "Q8", "C2^3", "A4", "D12", "C3:C4",
    "SL(2,3)", "S4", "C5:C4", "A5", "S3xS3", "S5", "S6",
]  # fmt: skip
