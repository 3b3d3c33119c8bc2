"""Tests for JSON lattice documents."""

import hashlib
import json

from sublattice import __version__
from sublattice.core.lattice import subgroup_lattice
from sublattice.core.models import LatticeDocument
from sublattice.reports.json_report import build_document, emit_json, input_hash, write_json


class TestEmitJson:
    """Test cases for the JSON exporter."""

    def test_s3_document(self, s3):
        """Test the S3 document's classes, totals and edges."""
        data = json.loads(emit_json(subgroup_lattice(s3), "S3"))
        assert data["engine_version"] == __version__
        assert data["mode"] == "members"
        assert [c["length"] for c in data["classes"]] == [1, 3, 1, 1]
        assert [c["order"] for c in data["classes"]] == [1, 2, 3, 6]
        assert [c["index"] for c in data["classes"]] == [1, 2, 3, 4]
        assert data["totals"] == {"classes": 4, "subgroups": 6}
        assert len(data["edges"]) == 8
        assert min(min(edge) for edge in data["edges"]) == 1
        assert data["group"]["order"] == 6
        assert data["group"]["generators"] == ["(1,2,3)", "(1,2)"]

    def test_normalizer_orders(self, s3):
        """Test each class records its normalizer order."""
        document = build_document(subgroup_lattice(s3), "S3")
        assert [c.normalizer_order for c in document.classes] == [6, 2, 6, 6]
        assert [c.normal for c in document.classes] == [True, False, True, True]

    def test_input_hash(self):
        """Test the hash is sha256 of the input bytes."""
        assert input_hash(b"degree: 1\n") == hashlib.sha256(b"degree: 1\n").hexdigest()
        assert input_hash("S3") == hashlib.sha256(b"S3").hexdigest()

    def test_deterministic(self, s3):
        """Test identical inputs give identical text."""
        lattice = subgroup_lattice(s3)
        assert emit_json(lattice, "S3") == emit_json(lattice, "S3")

    def test_indent(self, s3):
        """Test the indent argument."""
        text = emit_json(subgroup_lattice(s3), "S3", indent=4)
        assert text.startswith('{\n    "engine_version"')
        assert text.endswith("}\n")

    def test_validates_as_document(self, s3, tmp_path):
        """Test a written file loads back into the model."""
        path = write_json(subgroup_lattice(s3), "S3", tmp_path / "s3.json")
        document = LatticeDocument.model_validate_json(path.read_text(encoding="utf-8"))
        assert document.totals.subgroups == 6
