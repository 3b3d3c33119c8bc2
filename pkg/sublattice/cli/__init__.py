"""Command-line interface."""

from sublattice.cli.app import build_parser, main, run_cli

__all__ = ["build_parser", "main", "run_cli"]
