"""Tests for solvable lifting."""
