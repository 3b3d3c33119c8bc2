"""Lattice commands: lattice, solvable, lowlayer, intermediate."""

from __future__ import annotations

import argparse
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from sublattice.cli.app import SublatticeApp

from sublattice.core.data.group_file import load_group_file
from sublattice.core.lattice import (
    intermediate_subgroups,
    low_layer_subgroups,
    subgroup_lattice,
)
from sublattice.core.solvable.lifting import subgroups_solvable
from sublattice.core.subgroups.classes import fuse_classes
from sublattice.core.subgroups.cyclic_extension import lattice_cyclic_extension
from sublattice.core.subgroups.oracle import verify_classes, verify_masks
from sublattice.utils.error_handler import ValidationError
from sublattice.utils.rich_output import create_class_table, create_subgroup_table


def lattice_command(app: SublatticeApp, args: argparse.Namespace) -> int:
    """Classes of subgroups by cyclic extension."""
    G, source = app.load_group(args)
    lattice_filter = app.lattice_filter(args)
    seeds = app.load_seeds(args, G)
    classes = lattice_cyclic_extension(G, lattice_filter, seeds)
    if args.acting is None:
        return app.report_classes(G, classes, source, args, lattice_filter, "Subgroup classes")

    if args.dot or args.json:
        raise ValidationError("acting", args.acting, "cannot be combined with --dot or --json")
    acting, _ = app.resolve_group(args.acting)
    if args.verify:
        verify_classes(G, classes, lattice_filter)
    fused = fuse_classes(G, classes, acting)
    title = f"Subgroup classes under {app.group_label(acting)}"
    app.show(create_class_table(fused, title, app.group_label(G), app.show_generators(args)))
    return 0


def solvable_command(app: SublatticeApp, args: argparse.Namespace) -> int:
    """Classes of subgroups of a solvable group by lifting."""
    G, source = app.load_group(args)
    lattice_filter = app.lattice_filter(args)
    classes = subgroups_solvable(G, lattice_filter)
    return app.report_classes(G, classes, source, args, lattice_filter, "Solvable lifting")


def lowlayer_command(app: SublatticeApp, args: argparse.Namespace) -> int:
    """Classes at most k covering steps below G."""
    G, source = app.load_group(args)
    lattice = subgroup_lattice(G, seeds=app.load_seeds(args, G))
    if args.verify:
        verify_classes(G, lattice.classes)
    classes = low_layer_subgroups(G, args.k, args.max_index, lattice)
    numbers = [lattice.classes.index(cls) + 1 for cls in classes]
    title = f"Subgroups at most {args.k} steps below the group"
    label, show_gens = app.group_label(G), app.show_generators(args)
    app.show(create_class_table(classes, title, label, show_gens, numbers))
    app.export(lattice, source, args)
    return 0


def intermediate_command(app: SublatticeApp, args: argparse.Namespace) -> int:
    """Every V with U < V < G for the subgroup U given by --sub."""
    G, source = app.load_group(args)
    U = load_group_file(args.sub)
    lattice = subgroup_lattice(G, seeds=app.load_seeds(args, G))
    if args.verify:
        verify_masks(G, (m for cls in lattice.classes for m in cls.members))
    groups = intermediate_subgroups(G, U, lattice)
    title = f"Subgroups between a subgroup of order {U.order()} and the group"
    app.show(create_subgroup_table(groups, title, app.group_label(G)))
    app.export(lattice, source, args)
    return 0
