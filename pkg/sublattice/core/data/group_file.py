"""Reading and writing group files and perfect-seed files.

Group file grammar (blank lines and ``#`` comments ignored)::

    name: S4                      # optional
    degree: 4
    gen: (1,2,3,4)
    gen: images: [2,1,3,4]

Seed files list one subgroup per line as ``seed: <gen> ; <gen> ...``.
"""

from __future__ import annotations

from pathlib import Path

import pydantic
import yaml

from sublattice.core.models import GroupFile
from sublattice.core.perm.group import PermGroup
from sublattice.core.perm.permutation import Permutation
from sublattice.utils.error_handler import GroupFileError
from sublattice.utils.logger import get_logger

log = get_logger(__name__)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_images(text: str, degree: int, line_no: int) -> list[int]:
    try:
        images = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise GroupFileError(line_no, f"malformed image list {text!r}") from e
    if not isinstance(images, list) or not all(isinstance(i, int) for i in images):
        raise GroupFileError(line_no, f"malformed image list {text!r}")
    if len(images) != degree:
        raise GroupFileError(line_no, f"image list has {len(images)} entries, expected {degree}")
    if sorted(images) != list(range(1, degree + 1)):
        raise GroupFileError(line_no, f"images {images} are not a permutation of 1..{degree}")
    return images


def _parse_generator(text: str, degree: int, line_no: int) -> list[int]:
    """1-based image list of a generator in cycle or ``images:`` form."""
    text = text.strip()
    if text.startswith("images:"):
        return _parse_images(text.removeprefix("images:").strip(), degree, line_no)
    try:
        perm = Permutation.parse(text, degree)
    except GroupFileError as e:
        raise GroupFileError(line_no, e.reason) from e
    return [i + 1 for i in perm.images]


def read_group_file(text: str) -> GroupFile:
    """Parse group file text into a GroupFile model."""
    degree: int | None = None
    name: str | None = None
    generators: list[list[int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep:
            raise GroupFileError(line_no, f"expected 'key: value', got {line!r}")
        if key == "degree":
            if degree is not None:
                raise GroupFileError(line_no, "repeated degree line")
            try:
                degree = int(value)
            except ValueError as e:
                reason = f"degree must be an integer, got {value.strip()!r}"
                raise GroupFileError(line_no, reason) from e
            if degree < 1:
                raise GroupFileError(line_no, "degree must be positive")
        elif key == "name":
            name = value.strip() or None
        elif key in ("gen", "images"):
            if degree is None:
                raise GroupFileError(line_no, "generator before the degree line")
            body = value if key == "gen" else f"images: {value}"
            generators.append(_parse_generator(body, degree, line_no))
        else:
            raise GroupFileError(line_no, f"unknown key {key!r}")
    if degree is None:
        raise GroupFileError(None, "missing degree line")
    try:
        return GroupFile(degree=degree, generators=generators, name=name)
    except pydantic.ValidationError as e:
        raise GroupFileError(None, str(e)) from e


def parse_group_file(text: str) -> PermGroup:
    """Parse group file text into a permutation group."""
    group_file = read_group_file(text)
    log.debug(
        f"Parsed group of degree {group_file.degree} "
        f"with {len(group_file.generators)} generators"
    )
    return group_file.to_group()


def load_group_file(path: str | Path) -> PermGroup:
    return parse_group_file(Path(path).read_text(encoding="utf-8"))


def format_group_file(G: PermGroup, name: str | None = None) -> str:
    """Group file text for G in cycle notation; parse_group_file reads it back."""
    name = name if name is not None else G.name
    lines = [f"name: {name}"] if name else []
    lines.append(f"degree: {G.degree}")
    lines.extend(f"gen: {g.cycle_string()}" for g in G.generators)
    return "\n".join(lines) + "\n"


def parse_seed_file(text: str, degree: int) -> list[PermGroup]:
    """Subgroups listed as ``seed: <gen> ; <gen> ...`` lines."""
    seeds: list[PermGroup] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep or key.strip().lower() != "seed":
            raise GroupFileError(line_no, f"expected 'seed: <generators>', got {line!r}")
        perms = [
            Permutation.from_images(_parse_generator(part, degree, line_no))
            for part in value.split(";")
            if part.strip()
        ]
        seeds.append(PermGroup(perms, degree))
    log.debug(f"Read {len(seeds)} seed subgroups")
    return seeds


def load_seed_file(path: str | Path, degree: int) -> list[PermGroup]:
    return parse_seed_file(Path(path).read_text(encoding="utf-8"), degree)
