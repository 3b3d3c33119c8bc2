"""Shared fixtures: catalog groups and small group files."""

import pytest

from sublattice.core.perm.catalog import group_by_name
from sublattice.core.perm.group import PermGroup
from sublattice.core.perm.permutation import Permutation

S4_FILE = """\
# symmetric group on four points
name: S4
degree: 4
gen: (1,2,3,4)
gen: (1,2)
"""


@pytest.fixture
def s3() -> PermGroup:
    return group_by_name("S3")


@pytest.fixture
def s4() -> PermGroup:
    return group_by_name("S4")


@pytest.fixture
def a4() -> PermGroup:
    return group_by_name("A4")


@pytest.fixture
def a5() -> PermGroup:
    return group_by_name("A5")


@pytest.fixture
def d8() -> PermGroup:
    return group_by_name("D8")


@pytest.fixture
def klein() -> PermGroup:
    """V4 = {(), (1,2)(3,4), (1,3)(2,4), (1,4)(2,3)}."""
    return PermGroup(
        [Permutation.parse("(1,2)(3,4)", 4), Permutation.parse("(1,3)(2,4)", 4)], 4, name="V4"
    )


@pytest.fixture
def s4_file(tmp_path):
    path = tmp_path / "s4.grp"
    path.write_text(S4_FILE, encoding="utf-8")
    return path
