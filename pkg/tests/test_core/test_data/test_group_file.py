"""Tests for group files and seed files."""

import pytest

from sublattice.core.data.group_file import (
    format_group_file,
    load_group_file,
    load_seed_file,
    parse_group_file,
    parse_seed_file,
    read_group_file,
)
from sublattice.core.perm.catalog import group_by_name
from sublattice.utils.error_handler import GroupFileError


class TestReadGroupFile:
    """Test cases for parsing group files."""

    def test_cycles(self):
        """Test a file with a name, comments and cycle generators."""
        G = parse_group_file("# S4\nname: S4\ndegree: 4\ngen: (1,2,3,4)\ngen: (1,2)  # swap\n")
        assert G.order() == 24
        assert G.name == "S4"
        assert G.degree == 4

    def test_image_lists(self):
        """Test both image list spellings."""
        text = "degree: 3\ngen: images: [2,3,1]\nimages: [2, 1, 3]\n"
        group_file = read_group_file(text)
        assert group_file.generators == [[2, 3, 1], [2, 1, 3]]
        assert group_file.name is None
        assert group_file.to_group().order() == 6

    def test_blank_lines(self):
        """Test blank lines and whitespace are ignored."""
        G = parse_group_file("\n\n  degree: 3  \n\n gen: (1,2,3)\n")
        assert G.order() == 3

    def test_no_generators(self):
        """Test a degree line alone gives the trivial group."""
        G = parse_group_file("degree: 5\n")
        assert G.order() == 1
        assert G.degree == 5

    def test_load_from_path(self, s4_file):
        """Test reading a file from disk."""
        G = load_group_file(s4_file)
        assert G.order() == 24
        assert G.name == "S4"


class TestGroupFileErrors:
    """Test cases for malformed group files."""

    @pytest.mark.parametrize(
        "text,line,reason",
        [
            ("gen: (1,2)\ndegree: 2\n", 1, "generator before the degree line"),
            ("degree: 2\ndegree: 2\n", 2, "repeated degree line"),
            ("degree: 3\ncolour: red\n", 2, "unknown key"),
            ("degree: 3\ngen (1,2)\n", 2, "expected 'key: value'"),
            ("degree: x\n", 1, "degree must be an integer"),
            ("degree: 0\n", 1, "degree must be positive"),
            ("degree: 3\ngen: (1,2)(2,3)\n", 2, "repeated"),
            ("degree: 3\ngen: (1,4)\n", 2, "out of range"),
            ("degree: 3\ngen: images: [1,2\n", 2, "malformed image list"),
            ("degree: 3\ngen: images: [1,1,2]\n", 2, "not a permutation"),
            ("degree: 3\ngen: images: [2,1]\n", 2, "expected 3"),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line, reason):
        """Test each malformed file names its line and problem."""
        with pytest.raises(GroupFileError) as exc_info:
            read_group_file(text)
        assert exc_info.value.line == line
        assert reason in exc_info.value.reason

    def test_missing_degree(self):
        """Test a file without a degree line."""
        with pytest.raises(GroupFileError) as exc_info:
            read_group_file("name: empty\n")
        assert exc_info.value.line is None
        assert "missing degree line" in exc_info.value.reason


class TestFormatGroupFile:
    """Test cases for writing group files."""

    def test_format(self):
        """Test the written text lists name, degree and cycles."""
        text = format_group_file(group_by_name("S3"))
        assert text == "name: S3\ndegree: 3\ngen: (1,2,3)\ngen: (1,2)\n"

    def test_format_reads_back(self, s4):
        """Test a written file parses to the same group."""
        G = parse_group_file(format_group_file(s4))
        assert G.same_elements(s4)
        assert G.name == "S4"

    def test_name_override(self, s4):
        """Test an explicit name replaces the group's name."""
        assert format_group_file(s4, name="sym4").startswith("name: sym4\n")


class TestSeedFile:
    """Test cases for perfect-seed files."""

    def test_seeds(self, tmp_path):
        """Test one subgroup per seed line."""
        path = tmp_path / "seeds.txt"
        path.write_text("# A5\nseed: (1,2,3) ; (1,2,3,4,5)\nseed: ()\n", encoding="utf-8")
        seeds = load_seed_file(path, 5)
        assert [U.order() for U in seeds] == [60, 1]

    def test_image_form(self):
        """Test seeds accept image lists."""
        seeds = parse_seed_file("seed: images: [2,3,1]\n", 3)
        assert seeds[0].order() == 3

    def test_bad_line(self):
        """Test a line that is not a seed line."""
        with pytest.raises(GroupFileError) as exc_info:
            parse_seed_file("seed: (1,2)\ngen: (1,2)\n", 3)
        assert exc_info.value.line == 2
