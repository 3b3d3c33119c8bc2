"""Data models for group files and lattice documents."""

from enum import Enum

from pydantic import BaseModel, Field, field_validator, model_validator

from sublattice.core.perm.group import PermGroup
from sublattice.core.perm.permutation import Permutation


class LatticeMode(str, Enum):
    """How the lattice edges are expanded."""

    MEMBERS = "members"
    CLASSES = "classes"


# ============== Input Models ==============


class GroupFile(BaseModel):
    """A parsed group file: degree, generators as 1-based image lists, optional name."""

    degree: int = Field(ge=1)
    generators: list[list[int]] = Field(default_factory=list)
    name: str | None = None

    @model_validator(mode="after")
    def _check_images(self) -> "GroupFile":
        for images in self.generators:
            if len(images) != self.degree:
                raise ValueError(f"generator has {len(images)} images, expected {self.degree}")
            if sorted(images) != list(range(1, self.degree + 1)):
                raise ValueError(f"images {images} are not a permutation of 1..{self.degree}")
        return self

    def to_group(self) -> PermGroup:
        perms = [Permutation.from_images(images) for images in self.generators]
        return PermGroup(perms, self.degree, self.name)

    @classmethod
    def from_group(cls, G: PermGroup, name: str | None = None) -> "GroupFile":
        return cls(
            degree=G.degree,
            generators=[[i + 1 for i in g.images] for g in G.generators],
            name=name if name is not None else G.name,
        )


# ============== Output Models ==============


class GroupRecord(BaseModel):
    """The ambient group of a lattice document."""

    name: str | None = None
    degree: int
    order: int
    generators: list[str]


class ClassRecord(BaseModel):
    """One conjugacy class of subgroups."""

    index: int = Field(ge=1, description="1-based class number")
    order: int
    length: int
    normalizer_order: int
    normal: bool
    generators: list[str]


class Totals(BaseModel):
    classes: int
    subgroups: int


class LatticeDocument(BaseModel):
    """Machine-readable lattice.

    Edges are 1-based [lower class, lower member, upper class, upper member].
    """

    engine_version: str
    input_hash: str
    group: GroupRecord
    mode: LatticeMode
    classes: list[ClassRecord]
    edges: list[list[int]]
    totals: Totals

    @field_validator("edges")
    @classmethod
    def _edges_are_quadruples(cls, edges: list[list[int]]) -> list[list[int]]:
        for edge in edges:
            if len(edge) != 4 or min(edge) < 1:
                raise ValueError(f"malformed edge {edge}")
        return edges
