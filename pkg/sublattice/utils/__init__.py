"""Utility modules for Sublattice CLI."""

from sublattice.utils.error_handler import (
    ConfigurationError,
    GroupFileError,
    SublatticeError,
    ValidationError,
    VerificationError,
    format_error_response,
    get_user_friendly_error,
)
from sublattice.utils.logger import get_logger

__all__ = [
    "get_logger",
    "SublatticeError",
    "ValidationError",
    "ConfigurationError",
    "GroupFileError",
    "VerificationError",
    "get_user_friendly_error",
    "format_error_response",
]
