"""Direct product command."""

from __future__ import annotations

import argparse
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from sublattice.cli.app import SublatticeApp

from sublattice.core.goursat.product import direct_product
from sublattice.core.goursat.subdirect import goursat_classes, goursat_subgroups
from sublattice.core.lattice import maximality_edges
from sublattice.core.subgroups.cyclic_extension import lattice_cyclic_extension
from sublattice.core.subgroups.oracle import verify_masks
from sublattice.utils.logger import get_logger
from sublattice.utils.rich_output import create_class_table

log = get_logger(__name__)


def goursat_command(app: SublatticeApp, args: argparse.Namespace) -> int:
    """All subgroups of G x H from the subgroup lattices of G and H."""
    G, source_g = app.resolve_group(args.left)
    H, source_h = app.resolve_group(args.right)
    product = direct_product(G, H)
    P = product.group

    subs_g = [U for cls in lattice_cyclic_extension(G) for U in cls.member_groups(G.index)]
    subs_h = [U for cls in lattice_cyclic_extension(H) for U in cls.member_groups(H.index)]
    log.debug(f"Factors have {len(subs_g)} and {len(subs_h)} subgroups")
    subgroups = goursat_subgroups(G, H, subs_g, subs_h, product)
    if args.verify:
        verify_masks(P, (S.mask_in(P) for S in subgroups))

    classes = goursat_classes(product, subgroups)
    name = f"{app.group_label(G)} x {app.group_label(H)}"
    title = "Subgroups of the direct product"
    app.show(create_class_table(classes, title, name, app.show_generators(args)))

    if args.dot or args.json:
        source = _as_bytes(source_g) + b"\n" + _as_bytes(source_h)
        app.export(maximality_edges(classes, P), source, args)
    return 0


def _as_bytes(source: bytes | str) -> bytes:
    return source.encode("utf-8") if isinstance(source, str) else source
