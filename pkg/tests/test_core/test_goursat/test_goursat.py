"""Tests for direct products, factor groups and Goursat's lemma."""

import pytest

from sublattice.core.goursat.product import direct_product
from sublattice.core.goursat.quotient import FactorGroup, isomorphisms
from sublattice.core.goursat.subdirect import goursat_classes, goursat_data, goursat_subgroups
from sublattice.core.perm.catalog import group_by_name
from sublattice.core.perm.group import generator_ranks
from sublattice.core.perm.permutation import Permutation
from sublattice.core.subgroups.classes import total_subgroups
from sublattice.core.subgroups.cyclic_extension import lattice_cyclic_extension
from sublattice.core.subgroups.oracle import verify_masks
from sublattice.utils.error_handler import GroupTooLargeError


def _all_subgroups(G):
    return [U for cls in lattice_cyclic_extension(G) for U in cls.member_groups(G.index)]


class TestDirectProduct:
    """Test cases for DirectProduct."""

    def test_product_group(self, s3):
        """Test S3 x C2 acts on five points with order 12."""
        product = direct_product(s3, group_by_name("C2"))
        assert product.group.degree == 5
        assert product.group.order() == 12
        assert product.group.name == "S3xC2"
        assert product.split == 3

    def test_pair_and_projections(self, s3):
        """Test (g, h) projects back onto g and h."""
        C2 = group_by_name("C2")
        product = direct_product(s3, C2)
        g = Permutation.parse("(1,2,3)", 3)
        h = Permutation.parse("(1,2)", 2)
        x = product.pair(g, h)
        assert x == Permutation.parse("(1,2,3)(4,5)", 5)
        assert product.project_left(x) == g
        assert product.project_right(x) == h


class TestFactorGroup:
    """Test cases for factor groups and isomorphisms."""

    def test_quotient_order(self, s4, klein):
        """Test S4/V4 has order 6 with coset 0 the kernel."""
        index = s4.index
        Q = FactorGroup(index, (1 << 24) - 1, klein.mask_in(s4), generator_ranks(s4, index))
        assert Q.order == 6
        assert Q.reps[0] == 0
        assert sorted(Q.orders) == [1, 2, 2, 2, 3, 3]

    def test_quotient_isomorphic_to_s3(self, s4, klein, s3):
        """Test S4/V4 has six isomorphisms onto S3."""
        index = s4.index
        Q = FactorGroup(index, (1 << 24) - 1, klein.mask_in(s4), generator_ranks(s4, index))
        assert len(isomorphisms(Q, s3)) == 6

    @pytest.mark.parametrize(
        "left,right,count",
        [("S3", "S3", 6), ("C2", "C2", 1), ("C4", "C2^2", 0), ("C5", "C5", 4), ("A4", "C3:C4", 0)],
    )
    def test_isomorphism_counts(self, left, right, count):
        """Test isomorphism counts between small groups."""
        assert len(isomorphisms(group_by_name(left), group_by_name(right))) == count

    def test_isomorphisms_are_homomorphisms(self, s3):
        """Test every isomorphism respects the coset tables."""
        for chi in isomorphisms(s3, s3):
            Q = chi.source
            for x in range(Q.order):
                for y in range(Q.order):
                    assert chi(Q.mul(x, y)) == chi.target.mul(chi(x), chi(y))

    def test_isomorphism_limit(self, s4, monkeypatch):
        """Test factor groups above the isomorphism limit are refused."""
        from sublattice.core.config import settings

        monkeypatch.setattr(settings.engine, "isomorphism_limit", 10)
        with pytest.raises(GroupTooLargeError):
            FactorGroup.of_group(s4)


class TestGoursat:
    """Test cases for subgroups of direct products."""

    def test_klein_four(self):
        """Test C2 x C2 has five subgroups from five Goursat data."""
        C2 = group_by_name("C2")
        subs = _all_subgroups(C2)
        assert len(goursat_data(C2, C2, subs, subs)) == 5
        subgroups = goursat_subgroups(C2, C2, subs, subs)
        assert len(subgroups) == 5
        assert [S.order() for S in subgroups] == [1, 2, 2, 2, 4]

    def test_s3_times_c2(self, s3):
        """Test S3 x C2 (dihedral of order 12): 16 subgroups in 10 classes."""
        C2 = group_by_name("C2")
        product = direct_product(s3, C2)
        subgroups = goursat_subgroups(s3, C2, _all_subgroups(s3), _all_subgroups(C2), product)
        assert len(subgroups) == 16
        assert verify_masks(product.group, (S.mask_in(product.group) for S in subgroups)) == 16
        classes = goursat_classes(product, subgroups)
        assert len(classes) == 10
        assert total_subgroups(classes) == 16

    @pytest.mark.slow
    def test_s3_times_s3(self, s3):
        """Test S3 x S3 agrees with cyclic extension and the oracle."""
        product = direct_product(s3, group_by_name("S3"))
        subs = _all_subgroups(s3)
        subgroups = goursat_subgroups(s3, s3, subs, subs, product)
        P = product.group
        assert verify_masks(P, (S.mask_in(P) for S in subgroups)) == len(subgroups)
        classes = goursat_classes(product, subgroups)
        engine = lattice_cyclic_extension(P)
        assert len(classes) == len(engine)
        assert total_subgroups(classes) == total_subgroups(engine)
        assert [c.order for c in classes] == [c.order for c in engine]
