"""Lattice exporters."""

from sublattice.reports.dot import emit_dot, write_dot
from sublattice.reports.json_report import build_document, emit_json, write_json

__all__ = ["build_document", "emit_dot", "emit_json", "write_dot", "write_json"]
