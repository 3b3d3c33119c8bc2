"""Plain-text tables for Sublattice CLI.

Provides consistent terminal output; the CLI prints these through rich.
"""

from collections.abc import Sequence

from sublattice.core.perm.group import PermGroup
from sublattice.core.subgroups.classes import SubgroupClass, total_subgroups


def create_header(title: str, group_name: str = "") -> str:
    """Create a styled header."""
    if group_name:
        return f"=== {title}: {group_name} ==="
    return f"=== {title} ==="


def create_summary_line(classes: Sequence[SubgroupClass]) -> str:
    return f"{len(classes)} classes / {total_subgroups(classes)} subgroups"


def create_class_table(
    classes: Sequence[SubgroupClass],
    title: str,
    group_name: str = "",
    show_generators: bool = False,
    numbers: Sequence[int] | None = None,
) -> str:
    """Class index, order, length and normal flag, one row per class.

    ``numbers`` overrides the 1-based class numbers (for subsets of a lattice).
    """
    lines = [create_header(title, group_name), ""]
    header = f"{'class':>5}  {'order':>7}  {'length':>6}  {'normal':<6}"
    if show_generators:
        header += "  generators"
    lines.append(header)
    lines.append("-" * len(header))

    numbers = numbers if numbers is not None else range(1, len(classes) + 1)
    for number, cls in zip(numbers, classes, strict=True):
        normal = "yes" if cls.is_normal else "no"
        row = f"{number:>5}  {cls.order:>7}  {cls.length:>6}  {normal:<6}"
        if show_generators:
            gens = ", ".join(g.cycle_string() for g in cls.representative.generators)
            row += f"  {gens or '()'}"
        lines.append(row)

    lines.append("")
    lines.append(create_summary_line(classes))
    return "\n".join(lines)


def create_subgroup_table(groups: Sequence[PermGroup], title: str, group_name: str = "") -> str:
    """One row per subgroup: order and generators."""
    lines = [create_header(title, group_name), ""]
    if not groups:
        lines.append("no subgroups")
        return "\n".join(lines)

    for i, U in enumerate(groups, 1):
        gens = ", ".join(g.cycle_string() for g in U.generators) or "()"
        lines.append(f"{i:>3}. order {U.order():>5}  {gens}")

    lines.append("")
    lines.append(f"{len(groups)} subgroups")
    return "\n".join(lines)
