"""Tests for core package."""
