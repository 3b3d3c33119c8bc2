"""Incidence structure over subgroup classes: covering edges and lattice queries.

Edges point from the smaller subgroup to the larger one. In ``members`` mode
every subgroup of every class is a node ``(class, member)``; when the total
subgroup count exceeds ``settings.engine.expand_bound`` the lattice falls back
to ``classes`` mode, one node per class, with an edge wherever some member of
the lower class is maximal in the representative of the upper class.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import networkx as nx

from sublattice.core.config import settings
from sublattice.core.models import LatticeMode
from sublattice.core.perm.group import PermGroup
from sublattice.core.perm.index import ids_from_mask, is_submask, popcount
from sublattice.core.subgroups.classes import SubgroupClass, total_subgroups
from sublattice.core.subgroups.cyclic_extension import lattice_cyclic_extension
from sublattice.core.subgroups.filters import LatticeFilter
from sublattice.utils.error_handler import (
    DegreeMismatchError,
    IncompleteLatticeError,
    ValidationError,
)
from sublattice.utils.logger import get_logger

log = get_logger(__name__)

Edge = tuple[int, int, int, int]


@dataclass
class SubgroupLattice:
    """Classes of subgroups together with the covering relation between them.

    Attributes:
        group: the ambient group
        classes: canonically ordered classes
        edges: (lower class, lower member, upper class, upper member), 0-based;
            member indices are 0 in ``classes`` mode
        normal_flags: per class, whether its members are normal
        mode: ``members`` or ``classes``
        graph: networkx view of the edges
    """

    group: PermGroup
    classes: list[SubgroupClass]
    edges: list[Edge]
    normal_flags: list[bool]
    mode: LatticeMode
    graph: nx.DiGraph = field(repr=False)

    @property
    def total(self) -> int:
        return total_subgroups(self.classes)

    def members(self) -> list[tuple[int, int, int]]:
        """(class, member, mask) for every subgroup, in canonical order."""
        return [(i, j, m) for i, cls in enumerate(self.classes) for j, m in enumerate(cls.members)]

    def class_graph(self) -> nx.DiGraph:
        """One node per class; an edge where some members are in a covering pair."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.classes)))
        graph.add_edges_from((lc, uc) for lc, _, uc, _ in self.edges)
        return graph

    def height(self) -> int:
        """Length of the longest maximal chain from 1 to G."""
        return int(nx.dag_longest_path_length(self.graph))

    @property
    def top(self) -> int:
        return len(self.classes) - 1


def _covers_below(
    top_mask: int, candidates: Sequence[tuple[int, int, int]]
) -> list[tuple[int, int]]:
    """Members of ``candidates`` that are maximal in ``top_mask``.

    ``candidates`` are (class, member, mask) triples sorted by decreasing order;
    a candidate is kept unless it lies inside one already kept.
    """
    size = popcount(top_mask)
    kept: list[tuple[int, int, int]] = []
    for ci, mj, mask in candidates:
        order = popcount(mask)
        if order == size or size % order or not is_submask(mask, top_mask):
            continue
        if any(is_submask(mask, k[2]) for k in kept):
            continue
        kept.append((ci, mj, mask))
    return [(ci, mj) for ci, mj, _ in kept]


def maximality_edges(
    classes: Sequence[SubgroupClass],
    G: PermGroup,
    expand_bound: int | None = None,
    require_complete: bool = True,
) -> SubgroupLattice:
    """The covering relation among the subgroups described by ``classes``.

    With ``require_complete`` every subgroup except the largest must have an
    upper cover, otherwise IncompleteLatticeError is raised.
    """
    classes = list(classes)
    if not classes:
        raise IncompleteLatticeError("no classes given")
    bound = settings.engine.expand_bound if expand_bound is None else expand_bound
    members = [(i, j, m) for i, cls in enumerate(classes) for j, m in enumerate(cls.members)]
    descending = sorted(members, key=lambda t: -popcount(t[2]))
    mode = LatticeMode.MEMBERS if len(members) <= bound else LatticeMode.CLASSES

    edges: set[Edge] = set()
    if mode is LatticeMode.MEMBERS:
        for ui, uj, u_mask in members:
            for li, lj in _covers_below(u_mask, descending):
                edges.add((li, lj, ui, uj))
    else:
        for ui, cls in enumerate(classes):
            for li, _ in _covers_below(cls.mask, descending):
                edges.add((li, 0, ui, 0))
    ordered = sorted(edges)

    graph = nx.DiGraph()
    if mode is LatticeMode.MEMBERS:
        graph.add_nodes_from((i, j) for i, j, _ in members)
        graph.add_edges_from(((li, lj), (ui, uj)) for li, lj, ui, uj in ordered)
    else:
        graph.add_nodes_from(range(len(classes)))
        graph.add_edges_from((li, ui) for li, _, ui, _ in ordered)

    if require_complete:
        top_order = max(cls.order for cls in classes)
        if top_order != G.order():
            raise IncompleteLatticeError(f"largest class has order {top_order}, not {G.order()}")
        for node in graph.nodes:
            ci = node[0] if mode is LatticeMode.MEMBERS else node
            if classes[ci].order < top_order and graph.out_degree(node) == 0:
                raise IncompleteLatticeError(
                    f"subgroup of order {classes[ci].order} (class {ci + 1}) has no upper cover"
                )

    log.debug(
        f"Lattice in {mode.value} mode: {graph.number_of_nodes()} nodes, {len(ordered)} edges"
    )
    return SubgroupLattice(
        group=G,
        classes=classes,
        edges=ordered,
        normal_flags=[cls.is_normal for cls in classes],
        mode=mode,
        graph=graph,
    )


def subgroup_lattice(
    G: PermGroup,
    filter: LatticeFilter | None = None,
    seeds: Sequence[PermGroup] = (),
    expand_bound: int | None = None,
) -> SubgroupLattice:
    """Classes by cyclic extension, then covering edges."""
    filter = filter or LatticeFilter()
    classes = lattice_cyclic_extension(G, filter, seeds)
    return maximality_edges(classes, G, expand_bound, require_complete=filter.is_trivial())


def _lattice_for(G: PermGroup, lattice: SubgroupLattice | None) -> SubgroupLattice:
    return lattice if lattice is not None else subgroup_lattice(G)


def maximal_subgroup_classes(
    G: PermGroup, lattice: SubgroupLattice | None = None
) -> list[SubgroupClass]:
    """Classes of maximal subgroups of G, read off the covering edges."""
    lattice = _lattice_for(G, lattice)
    top = lattice.top
    below = {lc for lc, _, uc, _ in lattice.edges if uc == top and lc != top}
    return [lattice.classes[i] for i in sorted(below)]


def class_distances(lattice: SubgroupLattice) -> dict[int, int]:
    """Covering distance from G down to each class (G itself at 0)."""
    reverse = lattice.class_graph().reverse(copy=False)
    return dict(nx.single_source_shortest_path_length(reverse, lattice.top))


def low_layer_subgroups(
    G: PermGroup,
    k: int,
    index_bound: int | None = None,
    lattice: SubgroupLattice | None = None,
) -> list[SubgroupClass]:
    """Classes at most k covering steps below G.

    G sits at distance 0: ``k=0`` gives [G] and for ``k >= 1`` the classes at
    distance 1..k, so ``k=1`` gives exactly the maximal classes.

    Args:
        G: the ambient group
        k: covering distance from G, non-negative
        index_bound: keep only classes of index at most this
        lattice: a precomputed lattice of G

    Returns:
        Classes in lattice order.
    """
    if k < 0:
        raise ValidationError("k", k, "must be non-negative")
    if index_bound is not None and index_bound < 1:
        raise ValidationError("index_bound", index_bound, "must be positive")
    lattice = _lattice_for(G, lattice)
    order = G.order()
    distances = class_distances(lattice)
    nearest = 0 if k == 0 else 1
    return [
        cls
        for i, cls in enumerate(lattice.classes)
        if i in distances
        and nearest <= distances[i] <= k
        and (index_bound is None or order // cls.order <= index_bound)
    ]


def intermediate_subgroups(
    G: PermGroup, U: PermGroup, lattice: SubgroupLattice | None = None
) -> list[PermGroup]:
    """Every V with U < V < G.

    Starting from G, each overgroup W of U found so far contributes the
    subgroups of classes covered by the class of W that lie in W and contain U.
    """
    if U.degree != G.degree:
        raise DegreeMismatchError(G.degree, U.degree)
    u_mask = U.mask_in(G)
    lattice = _lattice_for(G, lattice)
    index = G.index
    full = (1 << index.order) - 1
    if u_mask == full:
        return []

    class_of: dict[int, int] = {}
    for i, cls in enumerate(lattice.classes):
        for m in cls.members:
            class_of[m] = i
    lower: dict[int, set[int]] = {}
    for lc, _, uc, _ in lattice.edges:
        lower.setdefault(uc, set()).add(lc)

    found: set[int] = set()
    queue = [full]
    for w_mask in queue:
        for ci in lower.get(class_of[w_mask], ()):
            for m in lattice.classes[ci].members:
                if m == u_mask or m in found:
                    continue
                if is_submask(m, w_mask) and m != w_mask and is_submask(u_mask, m):
                    found.add(m)
                    queue.append(m)

    result = []
    for m in sorted(found, key=lambda m: (popcount(m), ids_from_mask(m))):
        cls = lattice.classes[class_of[m]]
        j = cls.members.index(m)
        result.append(cls.member_group(j, index))
    log.debug(f"{len(result)} intermediate subgroups above a subgroup of order {popcount(u_mask)}")
    return result
