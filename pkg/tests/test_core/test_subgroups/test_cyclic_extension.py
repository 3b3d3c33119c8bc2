"""Tests for the cyclic extension lattice engine."""

import pytest
from sympy import divisors

from sublattice.core.perm.catalog import group_by_name
from sublattice.core.perm.group import PermGroup
from sublattice.core.perm.permutation import Permutation
from sublattice.core.subgroups.classes import total_subgroups
from sublattice.core.subgroups.cyclic_extension import (
    cyclic_extension_step,
    lattice_cyclic_extension,
    sylow_subgroup,
)
from sublattice.core.subgroups.filters import LatticeFilter
from sublattice.core.subgroups.oracle import verify_classes
from sublattice.core.subgroups.zuppos import ZuppoTable
from sublattice.utils.error_handler import FilterError, ValidationError

# name -> (subgroups, classes)
SUBGROUP_COUNTS = {
    "C6": (4, 4),
    "S3": (6, 4),
    "D8": (10, 8),
    "Q8": (6, 6),
    "C2^3": (16, 16),
    "A4": (10, 5),
    "D12": (16, 10),
    "C3:C4": (8, 6),
    "SL(2,3)": (15, 7),
    "S4": (30, 11),
    "C5:C4": (14, 6),
}


class TestLatticeCyclicExtension:
    """Test cases for lattice_cyclic_extension."""

    @pytest.mark.parametrize("name", sorted(SUBGROUP_COUNTS))
    def test_counts(self, name):
        """Test class and subgroup counts of small groups."""
        G = group_by_name(name)
        classes = lattice_cyclic_extension(G)
        subgroups, n_classes = SUBGROUP_COUNTS[name]
        assert len(classes) == n_classes
        assert total_subgroups(classes) == subgroups

    @pytest.mark.parametrize("name", ["S3", "D8", "A4", "SL(2,3)", "S4"])
    def test_matches_oracle(self, name):
        """Test the expanded classes are exactly the oracle's subgroups."""
        G = group_by_name(name)
        classes = lattice_cyclic_extension(G)
        assert verify_classes(G, classes) == SUBGROUP_COUNTS[name][0]

    def test_alternating_five(self, a5):
        """Test A5: 59 subgroups in 9 classes, including A5 itself."""
        classes = lattice_cyclic_extension(a5)
        assert len(classes) == 9
        assert total_subgroups(classes) == 59
        assert [c.order for c in classes] == [1, 2, 3, 4, 5, 6, 10, 12, 60]

    @pytest.mark.slow
    def test_symmetric_five(self):
        """Test S5: 156 subgroups in 19 classes."""
        classes = lattice_cyclic_extension(group_by_name("S5"))
        assert len(classes) == 19
        assert total_subgroups(classes) == 156

    def test_canonical_order(self, s4):
        """Test classes ascend by order, the trivial group first and G last."""
        classes = lattice_cyclic_extension(s4)
        orders = [c.order for c in classes]
        assert orders == sorted(orders)
        assert classes[0].order == 1
        assert classes[-1].order == 24
        assert all(24 % c.order == 0 for c in classes)

    def test_class_invariants(self, s4):
        """Test every class satisfies |class| * |N(U)| = |G| and lists distinct members."""
        for cls in lattice_cyclic_extension(s4):
            assert cls.length * cls.normalizer_order == 24
            assert len(set(cls.members)) == cls.length
            assert cls.members[0] == cls.mask
            assert cls.representative.order() == cls.order

    def test_deterministic(self, s4):
        """Test repeated runs give identical classes."""
        first = lattice_cyclic_extension(s4)
        second = lattice_cyclic_extension(group_by_name("S4"))
        assert [c.mask for c in first] == [c.mask for c in second]
        assert [c.members for c in first] == [c.members for c in second]

    def test_cyclic_group_orders(self):
        """Test C12 has one subgroup per divisor."""
        classes = lattice_cyclic_extension(group_by_name("C12"))
        assert [c.order for c in classes] == divisors(12)

    def test_trivial_group(self):
        """Test the trivial group has one class."""
        classes = lattice_cyclic_extension(PermGroup([], 3))
        assert len(classes) == 1
        assert classes[0].order == 1


class TestFilteredLattice:
    """Test cases for lattices restricted by a filter."""

    def test_max_order(self, s4):
        """Test subgroups of S4 of order at most 4."""
        classes = lattice_cyclic_extension(s4, LatticeFilter(max_order=4))
        assert len(classes) == 7
        assert total_subgroups(classes) == 21

    def test_filtered_matches_oracle(self, s4):
        """Test the filtered family equals the filtered oracle."""
        lattice_filter = LatticeFilter(max_order=4)
        classes = lattice_cyclic_extension(s4, lattice_filter)
        assert verify_classes(s4, classes, lattice_filter) == 21

    def test_two_subgroups(self, s4):
        """Test 2-subgroups of S4."""
        classes = lattice_cyclic_extension(s4, LatticeFilter(predicate_id="p-group:2"))
        assert len(classes) == 7
        assert total_subgroups(classes) == 20

    def test_cyclic_subgroups(self, s4):
        """Test cyclic subgroups of S4."""
        classes = lattice_cyclic_extension(s4, LatticeFilter(predicate_id="cyclic"))
        assert [c.order for c in classes] == [1, 2, 2, 3, 4]
        assert total_subgroups(classes) == 17

    def test_abelian_subgroups_of_a5(self, a5):
        """Test the abelian filter skips the perfect subgroup search."""
        classes = lattice_cyclic_extension(a5, LatticeFilter(predicate_id="abelian"))
        assert [c.order for c in classes] == [1, 2, 3, 4, 5]

    def test_non_inherited_predicate(self, s4):
        """Test a predicate that is not closed under subgroups is refused."""
        with pytest.raises(FilterError):
            lattice_cyclic_extension(s4, LatticeFilter(predicate_id="perfect"))


class TestSeeds:
    """Test cases for extra perfect seeds."""

    def test_seed_must_be_perfect(self, s4):
        """Test a non-perfect seed is rejected."""
        seed = PermGroup([Permutation.parse("(1,2)", 4)])
        with pytest.raises(ValidationError):
            lattice_cyclic_extension(s4, seeds=[seed])

    def test_seed_must_be_a_subgroup(self, a5):
        """Test a seed outside G is rejected."""
        seed = PermGroup([Permutation.parse("(1,2)", 5)])
        with pytest.raises(ValidationError):
            lattice_cyclic_extension(a5, seeds=[seed])

    def test_known_seed_changes_nothing(self, a5):
        """Test seeding with G itself gives the same classes."""
        classes = lattice_cyclic_extension(a5, seeds=[a5])
        assert len(classes) == 9
        assert total_subgroups(classes) == 59


class TestActingGroup:
    """Test cases for classes up to conjugacy by a normalizing group."""

    def test_alternating_under_symmetric(self, a4, s4):
        """Test A4 classes under S4."""
        classes = lattice_cyclic_extension(a4, acting=s4)
        assert [c.order for c in classes] == [1, 2, 3, 4, 12]
        assert total_subgroups(classes) == 10

    def test_filter_applies_before_fusion(self, klein, s4):
        """Test the order filter with an acting group."""
        classes = lattice_cyclic_extension(klein, LatticeFilter(max_order=2), acting=s4)
        assert [c.length for c in classes] == [1, 3]

    def test_not_normalizing(self, s3):
        """Test an acting group outside N(G) is rejected."""
        G = PermGroup([Permutation.parse("(1,2)", 3)], 3)
        with pytest.raises(ValidationError):
            lattice_cyclic_extension(G, acting=s3)


class TestExtensionStep:
    """Test cases for a single cyclic extension step."""

    def test_trivial_class_extensions(self, s3):
        """Test the trivial subgroup of S3 extends to its four prime-order subgroups."""
        classes = lattice_cyclic_extension(s3)
        table = ZuppoTable(s3)
        extensions = cyclic_extension_step(classes[0], table)
        assert sorted(mask.bit_count() for mask, _ in extensions) == [2, 2, 2, 3]

    def test_known_extensions_skipped(self, s3):
        """Test extensions whose signature is already known are left out."""
        classes = lattice_cyclic_extension(s3)
        table = ZuppoTable(s3)
        known = {table.signature_of_mask(m).bits for c in classes for m in c.members}
        assert cyclic_extension_step(classes[0], table, known) == []


class TestSylow:
    """Test cases for Sylow subgroups."""

    @pytest.mark.parametrize("p,order", [(2, 8), (3, 3), (5, 1)])
    def test_sylow_s4(self, s4, p, order):
        """Test Sylow subgroups of S4."""
        assert sylow_subgroup(s4, p).order() == order

    def test_sylow_a5(self, a5):
        """Test a Sylow 2-subgroup of A5 is a Klein four-group."""
        P = sylow_subgroup(a5, 2)
        assert P.order() == 4
        assert all(g.order == 2 for g in P.generators)

    def test_not_prime(self, s4):
        """Test composite p is rejected."""
        with pytest.raises(ValidationError):
            sylow_subgroup(s4, 4)
