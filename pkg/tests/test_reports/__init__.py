"""Tests for lattice exporters."""
