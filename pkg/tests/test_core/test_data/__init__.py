"""Tests for group files."""
