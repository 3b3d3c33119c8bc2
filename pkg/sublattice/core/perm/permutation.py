"""Permutations of {1..degree}, stored as 0-based image tuples.

Products act on the right: x^(g*h) = (x^g)^h.
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from sublattice.utils.error_handler import DegreeMismatchError, GroupFileError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0..degree-1}; printed 1-based."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images!r}")

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        """Wrap an image tuple already known to be a bijection."""
        perm = object.__new__(cls)
        object.__setattr__(perm, "images", images)
        return perm

    # ------------------------------------------------------------------ constructors

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_images(cls, images: Sequence[int], one_based: bool = True) -> Permutation:
        """Build from an image list, 1-based by default (``[2, 1, 4, 3]``)."""
        shift = 1 if one_based else 0
        return cls(tuple(i - shift for i in images))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build from disjoint 1-based cycles; fixed points may be omitted."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= degree:
                    raise ValueError(f"point {point} out of range 1..{degree}")
                if point in seen:
                    raise ValueError(f"point {point} repeated")
                seen.add(point)
            for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1]), strict=True):
                images[a - 1] = b - 1
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int) -> Permutation:
        """Parse cycle notation such as ``(1,2)(3,4)``; ``()`` is the identity."""
        stripped = text.strip()
        if not stripped:
            raise GroupFileError(None, "empty permutation")
        rest = _CYCLE_RE.sub("", stripped).strip()
        if rest:
            raise GroupFileError(None, f"malformed cycles in {text!r}")
        cycles: list[list[int]] = []
        for body in _CYCLE_RE.findall(stripped):
            body = body.strip()
            if not body:
                continue
            try:
                cycles.append([int(tok) for tok in re.split(r"\s*,\s*|\s+", body)])
            except ValueError as e:
                raise GroupFileError(None, f"malformed cycle ({body})") from e
        try:
            return cls.from_cycles(degree, cycles)
        except ValueError as e:
            raise GroupFileError(None, str(e)) from e

    # ------------------------------------------------------------------ arithmetic

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise DegreeMismatchError(self.degree, other.degree)
        return Permutation._trusted(tuple(map(other.images.__getitem__, self.images)))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def __invert__(self) -> Permutation:
        return self.inverse()

    def __pow__(self, exponent: int) -> Permutation:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Permutation.identity(self.degree)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self, x: Permutation) -> Permutation:
        """Return x⁻¹ * self * x."""
        return x.inverse() * self * x

    def commutator(self, other: Permutation) -> Permutation:
        """Return [self, other] = self⁻¹ other⁻¹ self other."""
        return self.inverse() * other.inverse() * self * other

    def image(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def embed(self, degree: int, offset: int = 0) -> Permutation:
        """Act on a larger domain, shifted by offset, fixing every other point."""
        if offset + self.degree > degree:
            raise DegreeMismatchError(degree, offset + self.degree)
        images = list(range(degree))
        for i, j in enumerate(self.images):
            images[offset + i] = offset + j
        return Permutation._trusted(tuple(images))

    def restrict(self, start: int, stop: int) -> Permutation:
        """Restriction to the 0-based block [start, stop), which must be invariant."""
        block = self.images[start:stop]
        if any(not start <= j < stop for j in block):
            raise ValueError(f"block [{start},{stop}) is not invariant")
        return Permutation(tuple(j - start for j in block))

    # ------------------------------------------------------------------ structure

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 1-based, each starting at its smallest point."""
        seen = [False] * self.degree
        out: list[tuple[int, ...]] = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cycle = [start + 1]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cycle.append(j + 1)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    @cached_property
    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def moved_points(self) -> list[int]:
        """0-based points not fixed, ascending."""
        return [i for i, j in enumerate(self.images) if i != j]

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __str__(self) -> str:
        return self.cycle_string()

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"
