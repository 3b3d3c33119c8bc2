"""Tests for subgroup classes by cyclic extension."""
