"""Tests for subgroup classes, perfect subgroups and the brute-force oracle."""

import pytest

from sublattice.core.perm.catalog import group_by_name
from sublattice.core.perm.group import PermGroup
from sublattice.core.perm.permutation import Permutation
from sublattice.core.subgroups.classes import (
    element_order_profile,
    fuse_classes,
    is_conjugate_subgroups,
    total_subgroups,
)
from sublattice.core.subgroups.cyclic_extension import lattice_cyclic_extension
from sublattice.core.subgroups.oracle import (
    oracle_all_subgroups,
    verify_classes,
    verify_masks,
)
from sublattice.core.subgroups.perfect import find_perfect_subgroups
from sublattice.utils.error_handler import (
    DegreeMismatchError,
    GroupTooLargeError,
    ValidationError,
    VerificationError,
)


class TestSubgroupClass:
    """Test cases for class data."""

    def test_normal_classes_of_s4(self, s4):
        """Test S4 has four normal subgroups: 1, V4, A4, S4."""
        classes = lattice_cyclic_extension(s4)
        assert [c.order for c in classes if c.is_normal] == [1, 4, 12, 24]

    def test_member_groups(self, s4):
        """Test member groups are the conjugates listed in members."""
        classes = lattice_cyclic_extension(s4)
        transpositions = next(c for c in classes if c.order == 2 and c.length == 6)
        groups = transpositions.member_groups(s4.index)
        assert len(groups) == 6
        assert [U.mask_in(s4) for U in groups] == transpositions.members

    def test_representative_has_smallest_signature(self, s4):
        """Test the representative is the first member."""
        for cls in lattice_cyclic_extension(s4):
            assert cls.representative.mask_in(s4) == cls.members[0]


class TestConjugacy:
    """Test cases for subgroup conjugacy helpers."""

    def test_conjugate_subgroups(self, s4):
        """Test <(1,2)> and <(3,4)> are conjugate."""
        U = PermGroup([Permutation.parse("(1,2)", 4)])
        V = PermGroup([Permutation.parse("(3,4)", 4)])
        x = is_conjugate_subgroups(s4, U, V)
        assert x is not None
        assert all(g.conjugate(x) in V for g in U.generators)

    def test_not_conjugate(self, s4):
        """Test subgroups of equal order in different classes."""
        U = PermGroup([Permutation.parse("(1,2)", 4)])
        V = PermGroup([Permutation.parse("(1,2)(3,4)", 4)])
        assert is_conjugate_subgroups(s4, U, V) is None

    def test_order_profile(self, s4, klein):
        """Test the element order multiset of V4."""
        assert element_order_profile(s4, klein) == (1, 2, 2, 2)


class TestFuseClasses:
    """Test cases for classes under conjugacy by a normalizing group."""

    def test_alternating_under_symmetric(self, s4, a4):
        """Test A4 classes keep their sizes under S4 conjugacy."""
        fused = fuse_classes(a4, lattice_cyclic_extension(a4), s4)
        assert [c.order for c in fused] == [1, 2, 3, 4, 12]
        assert [c.length for c in fused] == [1, 3, 4, 1, 1]
        assert all(c.length * c.normalizer_order == 24 for c in fused)

    def test_klein_under_symmetric(self, s4, klein):
        """Test the three order-2 subgroups of V4 fuse under S4."""
        fused = fuse_classes(klein, lattice_cyclic_extension(klein), s4)
        assert [c.order for c in fused] == [1, 2, 4]
        assert [c.length for c in fused] == [1, 3, 1]

    def test_klein_under_three_cycle(self, klein):
        """Test a 3-cycle permutes the order-2 subgroups of V4."""
        acting = PermGroup([Permutation.parse("(1,2,3)", 4)], 4)
        fused = fuse_classes(klein, lattice_cyclic_extension(klein), acting)
        assert [c.length for c in fused] == [1, 3, 1]
        assert all(c.normalizer_order * c.length == 3 for c in fused)

    def test_alternating_under_transposition(self, a4):
        """Test (1,2) splits A4's classes of order 2 and 3."""
        acting = PermGroup([Permutation.parse("(1,2)", 4)], 4)
        fused = fuse_classes(a4, lattice_cyclic_extension(a4), acting)
        assert [c.order for c in fused] == [1, 2, 2, 3, 3, 3, 4, 12]
        assert sorted(c.length for c in fused if c.order == 2) == [1, 2]
        assert sorted(c.length for c in fused if c.order == 3) == [1, 1, 2]
        assert total_subgroups(fused) == 10

    def test_trivial_acting_group(self, klein):
        """Test the trivial group leaves every subgroup in its own class."""
        fused = fuse_classes(klein, lattice_cyclic_extension(klein), PermGroup([], 4))
        assert len(fused) == 5
        assert all(c.length == 1 for c in fused)

    def test_symmetric_under_klein(self, s4, klein):
        """Test S4 under V4 conjugacy keeps all 30 subgroups in orbits dividing 4."""
        fused = fuse_classes(s4, lattice_cyclic_extension(s4), klein)
        assert total_subgroups(fused) == 30
        assert all(4 % c.length == 0 for c in fused)
        assert len(fused) > 11

    def test_acting_by_the_group_itself(self, s4):
        """Test acting by G reproduces the ordinary classes."""
        classes = lattice_cyclic_extension(s4)
        fused = fuse_classes(s4, classes, s4)
        assert sorted((c.order, c.length) for c in fused) == sorted(
            (c.order, c.length) for c in classes
        )

    def test_fused_members_are_subgroups_of_g(self, s4, a4):
        """Test every fused member is a subgroup of G inside <G, acting>."""
        fused = fuse_classes(a4, lattice_cyclic_extension(a4), s4)
        joined = PermGroup([*a4.generators, *s4.generators], 4)
        a4_mask = a4.mask_in(joined)
        assert all(m & a4_mask == m for c in fused for m in c.members)

    def test_acting_must_normalize(self, s4):
        """Test an acting group that moves G is rejected."""
        G = PermGroup([Permutation.parse("(1,2)", 4)], 4)
        with pytest.raises(ValidationError):
            fuse_classes(G, lattice_cyclic_extension(G), s4)

    def test_acting_degree(self, klein, s3):
        """Test an acting group of another degree is rejected."""
        with pytest.raises(DegreeMismatchError):
            fuse_classes(klein, lattice_cyclic_extension(klein), s3)


class TestPerfectSubgroups:
    """Test cases for the perfect subgroup search."""

    def test_solvable_group(self, s4):
        """Test a solvable group has only the trivial perfect subgroup."""
        perfect = find_perfect_subgroups(s4)
        assert [U.order() for U in perfect] == [1]

    def test_alternating_five(self, a5):
        """Test A5 is its only non-trivial perfect subgroup."""
        perfect = find_perfect_subgroups(a5)
        assert [U.order() for U in perfect] == [1, 60]

    @pytest.mark.slow
    def test_symmetric_five(self):
        """Test S5 has the perfect subgroup A5."""
        perfect = find_perfect_subgroups(group_by_name("S5"))
        assert [U.order() for U in perfect] == [1, 60]


class TestOracle:
    """Test cases for the join-closure oracle."""

    def test_all_subgroups(self, s4):
        """Test the oracle lists 30 subgroups of S4 in order."""
        subgroups = oracle_all_subgroups(s4)
        assert len(subgroups) == 30
        assert subgroups[0].order() == 1
        assert subgroups[-1].order() == 24
        orders = [U.order() for U in subgroups]
        assert orders == sorted(orders)

    def test_limit(self, s4):
        """Test the oracle refuses groups above its limit."""
        with pytest.raises(GroupTooLargeError):
            oracle_all_subgroups(s4, limit=10)

    def test_verify_detects_missing(self, s4):
        """Test a family missing one subgroup fails verification."""
        classes = lattice_cyclic_extension(s4)
        masks = [m for c in classes for m in c.members][:-1]
        with pytest.raises(VerificationError) as exc_info:
            verify_masks(s4, masks)
        assert exc_info.value.expected == 30
        assert exc_info.value.actual == 29

    def test_verify_detects_duplicates(self, s3):
        """Test a subgroup listed twice fails verification."""
        classes = lattice_cyclic_extension(s3)
        masks = [m for c in classes for m in c.members]
        with pytest.raises(VerificationError):
            verify_masks(s3, masks + masks[:1])

    def test_verify_classes(self, d8):
        """Test the engine's D8 classes pass."""
        assert verify_classes(d8, lattice_cyclic_extension(d8)) == 10
