"""Tests for the pydantic models."""

import pydantic
import pytest

from sublattice.core.models import GroupFile, LatticeDocument, LatticeMode


class TestGroupFileModel:
    """Test cases for GroupFile."""

    def test_to_group(self):
        """Test a GroupFile builds its group."""
        group_file = GroupFile(degree=3, generators=[[2, 3, 1], [2, 1, 3]], name="S3")
        G = group_file.to_group()
        assert G.order() == 6
        assert G.name == "S3"

    def test_from_group(self, s3):
        """Test generators become 1-based image lists."""
        group_file = GroupFile.from_group(s3)
        assert group_file.degree == 3
        assert group_file.generators == [[2, 3, 1], [2, 1, 3]]
        assert group_file.name == "S3"

    @pytest.mark.parametrize(
        "degree,generators",
        [(0, []), (3, [[1, 2]]), (3, [[1, 1, 2]]), (2, [[0, 1]])],
    )
    def test_invalid(self, degree, generators):
        """Test bad degrees and image lists fail validation."""
        with pytest.raises(pydantic.ValidationError):
            GroupFile(degree=degree, generators=generators)


class TestLatticeDocument:
    """Test cases for LatticeDocument."""

    def _document(self, edges):
        return LatticeDocument(
            engine_version="0.1.0",
            input_hash="0" * 64,
            group={"name": "C2", "degree": 2, "order": 2, "generators": ["(1,2)"]},
            mode="members",
            classes=[],
            edges=edges,
            totals={"classes": 2, "subgroups": 2},
        )

    def test_mode_enum(self):
        """Test the mode string is read into LatticeMode."""
        document = self._document([[1, 1, 2, 1]])
        assert document.mode is LatticeMode.MEMBERS
        assert LatticeMode("classes") is LatticeMode.CLASSES

    @pytest.mark.parametrize("edge", [[1, 1, 2], [0, 1, 2, 1]])
    def test_malformed_edges(self, edge):
        """Test edges must be 1-based quadruples."""
        with pytest.raises(pydantic.ValidationError):
            self._document([edge])
