"""Error handling utilities with user-friendly messages."""

from typing import Any

from sublattice.utils.logger import get_logger


class SublatticeError(Exception):
    """Base exception for Sublattice CLI errors."""

    def __init__(
        self, message: str, user_message: str | None = None, details: dict[str, Any] | None = None
    ):
        super().__init__(message)
        self.user_message = user_message or message
        self.details = details or {}

    def log(self) -> None:
        """Log the error with details."""
        get_logger(__name__).error(f"{self.__class__.__name__}: {self.args[0]}", extra=self.details)


class ValidationError(SublatticeError):
    """Exception for validation errors."""

    def __init__(self, field: str, value: Any, reason: str, user_message: str | None = None):
        message = f"Validation error for {field}: {value} - {reason}"
        if user_message is None:
            user_message = f"Invalid {field}={value}: {reason}"
        super().__init__(message, user_message, {"field": field, "value": value, "reason": reason})
        self.field = field
        self.value = value


class ConfigurationError(SublatticeError):
    """Exception for configuration errors."""

    def __init__(self, setting: str, reason: str, user_message: str | None = None):
        message = f"Configuration error for {setting}: {reason}"
        if user_message is None:
            user_message = (
                f"Configuration error: {setting} - {reason}. "
                "Check the config file or environment."
            )
        super().__init__(message, user_message, {"setting": setting, "reason": reason})
        self.setting = setting


class GroupFileError(SublatticeError):
    """Exception for malformed group or seed files."""

    def __init__(self, line: int | None, reason: str):
        where = f"line {line}" if line is not None else "input"
        super().__init__(
            f"Group file error at {where}: {reason}",
            f"Cannot read group file ({where}): {reason}",
            {"line": line, "reason": reason},
        )
        self.line = line
        self.reason = reason


class DegreeMismatchError(SublatticeError):
    """Exception when permutations of different degrees meet."""

    def __init__(self, expected: int, actual: int):
        super().__init__(
            f"Degree mismatch: expected {expected}, got {actual}",
            f"Permutation degree {actual} does not match group degree {expected}.",
            {"expected": expected, "actual": actual},
        )
        self.expected = expected
        self.actual = actual


class GroupTooLargeError(SublatticeError):
    """Exception when a group exceeds a configured size guard."""

    def __init__(self, order: int, limit: int, what: str = "element cap"):
        super().__init__(
            f"Group of order {order} exceeds the {what} ({limit})",
            f"Group order {order} is above the {what} of {limit}; raise the limit in the config.",
            {"order": order, "limit": limit, "what": what},
        )
        self.order = order
        self.limit = limit


class NotAMemberError(SublatticeError):
    """Exception when an element lies outside the ambient group."""

    def __init__(self, what: str):
        super().__init__(f"Not a member of the group: {what}", details={"what": what})


class NotASubgroupError(SublatticeError):
    """Exception when a group is not contained in the ambient group."""

    def __init__(self, what: str):
        super().__init__(f"Not a subgroup of the group: {what}", details={"what": what})


class NotSolvableError(SublatticeError):
    """Exception for solvable-only operations on non-solvable groups."""

    def __init__(self, order: int):
        super().__init__(
            f"Group of order {order} is not solvable",
            f"The group (order {order}) is not solvable; use the lattice command instead.",
            {"order": order},
        )
        self.order = order


class FilterError(SublatticeError):
    """Exception for unusable lattice filters."""

    def __init__(self, predicate: str, reason: str):
        super().__init__(
            f"Filter {predicate!r} rejected: {reason}",
            details={"predicate": predicate, "reason": reason},
        )
        self.predicate = predicate


class IncompleteLatticeError(SublatticeError):
    """Exception when a class list misses subgroups."""

    def __init__(self, reason: str):
        super().__init__(f"Incomplete class list: {reason}", details={"reason": reason})


class ComplementSearchError(SublatticeError):
    """Exception when the complement search space exceeds its guard."""

    def __init__(self, size: int, limit: int):
        super().__init__(
            f"Complement search space {size} exceeds limit {limit}",
            details={"size": size, "limit": limit},
        )


class VerificationError(SublatticeError):
    """Exception when the engine disagrees with the brute-force oracle."""

    def __init__(self, expected: int, actual: int, reason: str = "subgroup families differ"):
        super().__init__(
            f"Verification failed: {reason} (oracle {expected}, engine {actual})",
            details={"expected": expected, "actual": actual, "reason": reason},
        )
        self.expected = expected
        self.actual = actual


def get_user_friendly_error(error: Exception) -> str:
    """
    Convert an exception to a user-friendly error message.

    Args:
        error: The exception to convert

    Returns:
        User-friendly error message string
    """
    if isinstance(error, SublatticeError):
        return error.user_message

    error_type = type(error).__name__
    error_str = str(error)

    if isinstance(error, FileNotFoundError):
        return f"File not found: {error.filename}"

    if isinstance(error, UnicodeDecodeError):
        return "Input is not valid UTF-8 text."

    if isinstance(error, MemoryError):
        return "Out of memory; lower the element cap or use a smaller group."

    return f"Error: {error_str if error_str else error_type}"


def format_error_response(error: Exception) -> str:
    """
    Format an error for display to the user.

    Args:
        error: The exception to format

    Returns:
        Formatted error message string
    """
    user_msg = get_user_friendly_error(error)
    return f"error: {user_msg}"
