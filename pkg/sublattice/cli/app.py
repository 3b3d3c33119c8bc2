"""Sublattice CLI - command-line entry point.

Exit status: 0 on success, 1 on input or engine errors, 2 when ``--verify``
finds a mismatch with the brute-force oracle.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

import pydantic
from dotenv import load_dotenv
from rich.console import Console

from sublattice import __version__
from sublattice.cli.commands.registry import CommandRegistry
from sublattice.core.config import config_error, settings
from sublattice.core.data.group_file import load_seed_file, parse_group_file
from sublattice.core.lattice import SubgroupLattice, maximality_edges
from sublattice.core.perm.catalog import CATALOG_NAMES, group_by_name
from sublattice.core.perm.group import PermGroup
from sublattice.core.subgroups.classes import SubgroupClass
from sublattice.core.subgroups.filters import LatticeFilter
from sublattice.core.subgroups.filters import registry as predicate_registry
from sublattice.core.subgroups.oracle import verify_classes
from sublattice.reports.dot import write_dot
from sublattice.reports.json_report import write_json
from sublattice.utils.error_handler import (
    SublatticeError,
    ValidationError,
    VerificationError,
    format_error_response,
)
from sublattice.utils.logger import get_logger, set_level
from sublattice.utils.rich_output import create_class_table

log = get_logger(__name__)


class SublatticeApp:
    """Shared state and helpers for the subcommands."""

    def __init__(self, console: Console | None = None, error_console: Console | None = None):
        self.console = console or Console(highlight=False, soft_wrap=True)
        self.error_console = error_console or Console(stderr=True, highlight=False)
        self.registry = CommandRegistry(self)

    # ------------------------------------------------------------------ output

    def show(self, text: str) -> None:
        self.console.print(text, markup=False)

    def error(self, text: str) -> None:
        self.error_console.print(text, markup=False)

    @staticmethod
    def group_label(G: PermGroup) -> str:
        return G.name or f"group of order {G.order()}"

    @staticmethod
    def show_generators(args: argparse.Namespace) -> bool:
        return bool(getattr(args, "show_generators", False)) or settings.output.show_generators

    # ------------------------------------------------------------------ inputs

    def resolve_group(self, ref: str) -> tuple[PermGroup, bytes | str]:
        """A group file path, or a catalog name when no such file exists."""
        path = Path(ref)
        if path.is_file():
            data = path.read_bytes()
            G = parse_group_file(data.decode("utf-8"))
            if G.name is None:
                G.name = path.stem
            return G, data
        return group_by_name(ref), ref

    def load_group(self, args: argparse.Namespace) -> tuple[PermGroup, bytes | str]:
        if args.file and args.group:
            raise ValidationError(
                "input", args.file, "give either a group file or --group, not both"
            )
        if args.group:
            return group_by_name(args.group), args.group
        if args.file:
            data = Path(args.file).read_bytes()
            G = parse_group_file(data.decode("utf-8"))
            if G.name is None:
                G.name = Path(args.file).stem
            return G, data
        raise ValidationError("input", None, "give a group file or --group NAME")

    def lattice_filter(self, args: argparse.Namespace) -> LatticeFilter:
        max_order = getattr(args, "max_order", None)
        try:
            lattice_filter = LatticeFilter(
                max_order=max_order, predicate_id=getattr(args, "predicate", None)
            )
        except pydantic.ValidationError as e:
            raise ValidationError("max_order", max_order, e.errors()[0]["msg"]) from e
        lattice_filter.predicate()
        return lattice_filter

    def load_seeds(self, args: argparse.Namespace, G: PermGroup) -> list[PermGroup]:
        path = getattr(args, "perfect_seeds", None)
        return load_seed_file(path, G.degree) if path else []

    # ------------------------------------------------------------------ reporting

    def export(
        self, lattice: SubgroupLattice, source: bytes | str, args: argparse.Namespace
    ) -> None:
        if getattr(args, "dot", None):
            write_dot(lattice, args.dot, rank_hints=args.rank_hints or None)
        if getattr(args, "json", None):
            write_json(lattice, source, args.json)

    def report_classes(
        self,
        G: PermGroup,
        classes: list[SubgroupClass],
        source: bytes | str,
        args: argparse.Namespace,
        lattice_filter: LatticeFilter,
        title: str,
    ) -> int:
        """Verify if asked, print the class table and write the requested exports."""
        if args.verify:
            verify_classes(G, classes, lattice_filter)
        table = create_class_table(classes, title, self.group_label(G), self.show_generators(args))
        self.show(table)
        if args.dot or args.json:
            lattice = maximality_edges(classes, G, require_complete=lattice_filter.is_trivial())
            self.export(lattice, source, args)
        return 0


def _epilog(registry: CommandRegistry) -> str:
    commands = "\n".join(f"  {cmd.usage}" for cmd in registry.list_commands())
    predicates = "\n".join(
        f"  {row['name']:<14} {row['description']}" for row in predicate_registry.list_predicates()
    )
    return f"""
Commands:
{commands}

Predicates (--predicate):
{predicates}

Examples:
  # Classes of subgroups of S4, checked against the brute-force oracle
  sublattice lattice s4.grp --verify

  # Same group from the catalog, with a DOT lattice
  sublattice lattice --group S4 --dot s4.dot

  # Maximal subgroup classes
  sublattice lowlayer s4.grp --k 1

Catalog names: {", ".join(CATALOG_NAMES)}, and Cn, Dn, Sn, An
        """


def build_parser(registry: CommandRegistry | None = None) -> argparse.ArgumentParser:
    """The argument parser; subcommand names, aliases and help come from ``registry``."""
    registry = registry or SublatticeApp().registry
    parser = argparse.ArgumentParser(
        prog="sublattice",
        description="Subgroup lattices of finite permutation groups",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=_epilog(registry),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--debug", action="store_true", help="Log algorithm stages")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("file", nargs="?", help="Group file")
    source.add_argument("--group", metavar="NAME", help="Catalog group instead of a file")

    filtering = argparse.ArgumentParser(add_help=False)
    filtering.add_argument("--max-order", type=int, metavar="N", help="Largest subgroup order")
    filtering.add_argument(
        "--predicate", metavar="NAME", help="Subgroup predicate, e.g. abelian or p-group:2"
    )

    seeds = argparse.ArgumentParser(add_help=False)
    seeds.add_argument(
        "--perfect-seeds", metavar="PATH", help="Extra perfect subgroups, one 'seed:' line each"
    )

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--verify", action="store_true", help="Check against the oracle")
    output.add_argument("--dot", metavar="PATH", help="Write the lattice as graphviz text")
    output.add_argument("--json", metavar="PATH", help="Write the lattice as JSON")
    output.add_argument(
        "--rank-hints", action="store_true", help="Group DOT nodes of equal order on one rank"
    )
    output.add_argument(
        "--show-generators", action="store_true", help="List representative generators"
    )

    parents = {
        "lattice": [common, source, filtering, seeds, output],
        "solvable": [common, source, filtering, output],
        "goursat": [common, output],
        "intermediate": [common, source, seeds, output],
        "lowlayer": [common, source, seeds, output],
    }
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    subparsers = {
        cmd.name: sub.add_parser(
            cmd.name,
            aliases=cmd.aliases,
            parents=parents[cmd.name],
            help=cmd.description,
            description=cmd.description,
        )
        for cmd in registry.list_commands()
    }
    subparsers["lattice"].add_argument(
        "--acting",
        metavar="NAME|PATH",
        help="Classify up to conjugacy by this group (it must normalize G)",
    )
    subparsers["goursat"].add_argument("left", help="Group file or catalog name for G")
    subparsers["goursat"].add_argument("right", help="Group file or catalog name for H")
    subparsers["intermediate"].add_argument(
        "--sub", required=True, metavar="PATH", help="Group file of U"
    )
    lowlayer = subparsers["lowlayer"]
    lowlayer.add_argument("--k", type=int, required=True, help="Covering distance from G")
    lowlayer.add_argument("--max-index", type=int, metavar="N", help="Largest index kept")
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one subcommand and return its exit status."""
    load_dotenv()
    app = SublatticeApp()
    parser = build_parser(app.registry)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1

    if config_error is not None:
        app.error(format_error_response(config_error))
        return 1
    if args.debug or settings.debug:
        set_level(logging.DEBUG)

    try:
        return app.registry.execute(args.command, args)
    except VerificationError as e:
        if args.debug:
            e.log()
        app.error(format_error_response(e))
        return 2
    except SublatticeError as e:
        if args.debug:
            e.log()
        app.error(format_error_response(e))
        return 1
    except (OSError, UnicodeDecodeError) as e:
        app.error(format_error_response(e))
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
