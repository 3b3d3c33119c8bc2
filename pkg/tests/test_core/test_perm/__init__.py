"""Tests for permutations and permutation groups."""
