"""Tests for direct products."""
