"""CLI commands module."""

from sublattice.cli.commands.goursat import goursat_command
from sublattice.cli.commands.lattice import (
    intermediate_command,
    lattice_command,
    lowlayer_command,
    solvable_command,
)
from sublattice.cli.commands.registry import Command, CommandRegistry

__all__ = [
    "CommandRegistry",
    "Command",
    "goursat_command",
    "intermediate_command",
    "lattice_command",
    "lowlayer_command",
    "solvable_command",
]
