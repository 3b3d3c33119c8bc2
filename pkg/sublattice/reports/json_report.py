"""JSON lattice documents."""

from __future__ import annotations

import hashlib
from pathlib import Path

from sublattice import __version__
from sublattice.core.config import settings
from sublattice.core.lattice import SubgroupLattice
from sublattice.core.models import ClassRecord, GroupRecord, LatticeDocument, Totals
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


def input_hash(source: bytes | str) -> str:
    """sha256 of the input file bytes, or of a catalog name."""
    data = source.encode("utf-8") if isinstance(source, str) else source
    return hashlib.sha256(data).hexdigest()


def build_document(lattice: SubgroupLattice, source: bytes | str) -> LatticeDocument:
    G = lattice.group
    classes = [
        ClassRecord(
            index=i + 1,
            order=cls.order,
            length=cls.length,
            normalizer_order=cls.normalizer_order,
            normal=cls.is_normal,
            generators=[g.cycle_string() for g in cls.representative.generators],
        )
        for i, cls in enumerate(lattice.classes)
    ]
    return LatticeDocument(
        engine_version=__version__,
        input_hash=input_hash(source),
        group=GroupRecord(
            name=G.name,
            degree=G.degree,
            order=G.order(),
            generators=[g.cycle_string() for g in G.generators],
        ),
        mode=lattice.mode,
        classes=classes,
        edges=[[lc + 1, lm + 1, uc + 1, um + 1] for lc, lm, uc, um in lattice.edges],
        totals=Totals(classes=len(lattice.classes), subgroups=lattice.total),
    )


def emit_json(lattice: SubgroupLattice, source: bytes | str, indent: int | None = None) -> str:
    """Serialized lattice document; identical inputs give identical text."""
    indent = settings.output.json_indent if indent is None else indent
    return build_document(lattice, source).model_dump_json(indent=indent) + "\n"


def write_json(lattice: SubgroupLattice, source: bytes | str, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(emit_json(lattice, source), encoding="utf-8")
    log.info(f"JSON lattice written to {path}")
    return path
