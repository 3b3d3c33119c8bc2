"""Command registry and handler."""

from __future__ import annotations

import argparse
from collections.abc import Callable
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from sublattice.cli.app import SublatticeApp

from sublattice.utils.error_handler import ValidationError
from sublattice.utils.logger import get_logger

log = get_logger(__name__)

Handler = Callable[[argparse.Namespace], int]


class Command:
    """Represents a subcommand."""

    def __init__(
        self,
        name: str,
        handler: Handler,
        description: str = "",
        usage: str = "",
        aliases: list[str] | None = None,
    ):
        self.name = name
        self.handler = handler
        self.description = description
        self.usage = usage or f"sublattice {name}"
        self.aliases = aliases or []


class CommandRegistry:
    """Registry for subcommands."""

    def __init__(self, app: SublatticeApp):
        self.app = app
        self._commands: dict[str, Command] = {}
        self._register_builtin_commands()

    def register(
        self,
        name: str,
        handler: Handler,
        description: str = "",
        usage: str = "",
        aliases: list[str] | None = None,
    ) -> None:
        """Register a command."""
        cmd = Command(name, handler, description, usage, aliases)
        self._commands[name.lower()] = cmd

        for alias in aliases or []:
            self._commands[alias.lower()] = cmd

    def get(self, name: str) -> Command | None:
        """Get a command by name."""
        return self._commands.get(name.lower())

    def list_commands(self) -> list[Command]:
        """List all unique commands (excluding aliases)."""
        seen = set()
        commands = []

        for cmd in self._commands.values():
            if cmd.name not in seen:
                seen.add(cmd.name)
                commands.append(cmd)

        return sorted(commands, key=lambda c: c.name)

    def execute(self, name: str, args: argparse.Namespace) -> int:
        """Run a command and return its exit status."""
        cmd = self.get(name)
        if not cmd:
            raise ValidationError("command", name, "unknown command")

        log.debug(f"Running command {cmd.name}")
        try:
            return cmd.handler(args)
        except Exception as e:
            log.debug(f"Command {cmd.name} failed: {e}")
            raise

    def _register_builtin_commands(self) -> None:
        """Register built-in commands."""

        self.register(
            "lattice",
            self._cmd_lattice,
            "Conjugacy classes of subgroups by cyclic extension",
            "sublattice lattice <file> [--max-order N] [--acting NAME|PATH] [--verify]"
            " [--dot PATH] [--json PATH]",
            aliases=["classes"],
        )

        self.register(
            "solvable",
            self._cmd_solvable,
            "Subgroup classes of a solvable group by layer lifting",
            "sublattice solvable <file> [--max-order N] [--verify]",
        )

        self.register(
            "goursat",
            self._cmd_goursat,
            "Subgroups of a direct product by Goursat's lemma",
            "sublattice goursat <fileG> <fileH> [--verify]",
            aliases=["product"],
        )

        self.register(
            "intermediate",
            self._cmd_intermediate,
            "Subgroups strictly between a subgroup and the group",
            "sublattice intermediate <file> --sub <subfile>",
        )

        self.register(
            "lowlayer",
            self._cmd_lowlayer,
            "Classes at most k covering steps below the group",
            "sublattice lowlayer <file> --k K [--max-index N]",
            aliases=["maximal"],
        )

    # ------------------------------------------------------------------ handlers

    def _cmd_lattice(self, args: argparse.Namespace) -> int:
        """Lattice command handler."""
        from sublattice.cli.commands.lattice import lattice_command

        return lattice_command(self.app, args)

    def _cmd_solvable(self, args: argparse.Namespace) -> int:
        """Solvable lifting command handler."""
        from sublattice.cli.commands.lattice import solvable_command

        return solvable_command(self.app, args)

    def _cmd_goursat(self, args: argparse.Namespace) -> int:
        """Direct product command handler."""
        from sublattice.cli.commands.goursat import goursat_command

        return goursat_command(self.app, args)

    def _cmd_intermediate(self, args: argparse.Namespace) -> int:
        """Intermediate subgroups command handler."""
        from sublattice.cli.commands.lattice import intermediate_command

        return intermediate_command(self.app, args)

    def _cmd_lowlayer(self, args: argparse.Namespace) -> int:
        """Low layer command handler."""
        from sublattice.cli.commands.lattice import lowlayer_command

        return lowlayer_command(self.app, args)
