"""Group file input and output."""

from sublattice.core.data.group_file import (
    format_group_file,
    load_group_file,
    load_seed_file,
    parse_group_file,
    parse_seed_file,
    read_group_file,
)

__all__ = [
    "format_group_file",
    "load_group_file",
    "load_seed_file",
    "parse_group_file",
    "parse_seed_file",
    "read_group_file",
]
