"""Graphviz text for subgroup lattices.

Normal subgroups are boxes, all others circles. A node ``cA_nB`` is member B
of class A (both 1-based) and is labelled ``A-B``, or just ``A`` when the class
is normal. Edges run from the smaller subgroup to the larger one.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from jinja2 import Environment

from sublattice.core.config import settings
from sublattice.core.lattice import SubgroupLattice
from sublattice.core.models import LatticeMode
from sublattice.utils.logger import get_logger

log = get_logger(__name__)

DOT_TEMPLATE = """\
digraph "{{ name }}" {
  graph [rankdir="BT"];
{% for node in nodes %}
  "{{ node.id }}" [label="{{ node.label }}", shape="{{ node.shape }}"\
{% if node.peripheries %}, peripheries="{{ node.peripheries }}"{% endif %}];
{% endfor %}
{% for lower, upper in edges %}
  "{{ lower }}" -> "{{ upper }}";
{% endfor %}
{% for rank in ranks %}
  { rank="same";{% for node_id in rank %} "{{ node_id }}";{% endfor %} }
{% endfor %}
}
"""

_environment = Environment(trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True)
_template = _environment.from_string(DOT_TEMPLATE)


@dataclass(frozen=True)
class DotNode:
    id: str
    label: str
    shape: str
    order: int
    peripheries: int | None = None


def node_id(class_index: int, member_index: int | None = None) -> str:
    """``cA_nB`` for 0-based indices, or ``cA`` for a whole class."""
    if member_index is None:
        return f"c{class_index + 1}"
    return f"c{class_index + 1}_n{member_index + 1}"


def _nodes(lattice: SubgroupLattice) -> list[DotNode]:
    nodes: list[DotNode] = []
    for i, cls in enumerate(lattice.classes):
        shape = "box" if cls.is_normal else "circle"
        if lattice.mode is LatticeMode.CLASSES:
            marking = 2 if cls.length > 1 else None
            nodes.append(DotNode(node_id(i), str(i + 1), shape, cls.order, marking))
            continue
        for j in range(cls.length):
            label = str(i + 1) if cls.is_normal else f"{i + 1}-{j + 1}"
            nodes.append(DotNode(node_id(i, j), label, shape, cls.order))
    return nodes


def _edges(lattice: SubgroupLattice) -> list[tuple[str, str]]:
    if lattice.mode is LatticeMode.CLASSES:
        return [(node_id(lc), node_id(uc)) for lc, _, uc, _ in lattice.edges]
    return [(node_id(lc, lm), node_id(uc, um)) for lc, lm, uc, um in lattice.edges]


def _ranks(nodes: list[DotNode]) -> list[list[str]]:
    by_order: dict[int, list[str]] = {}
    for node in nodes:
        by_order.setdefault(node.order, []).append(node.id)
    return [by_order[order] for order in sorted(by_order) if len(by_order[order]) > 1]


def emit_dot(lattice: SubgroupLattice, rank_hints: bool | None = None) -> str:
    """The lattice as graphviz text, nodes and edges in canonical order."""
    rank_hints = settings.output.rank_hints if rank_hints is None else rank_hints
    nodes = _nodes(lattice)
    name = (lattice.group.name or "lattice").replace('"', '\\"')
    return _template.render(
        name=name,
        nodes=nodes,
        edges=_edges(lattice),
        ranks=_ranks(nodes) if rank_hints else [],
    )


def write_dot(lattice: SubgroupLattice, path: str | Path, rank_hints: bool | None = None) -> Path:
    path = Path(path)
    path.write_text(emit_dot(lattice, rank_hints), encoding="utf-8")
    log.info(f"DOT lattice written to {path}")
    return path
