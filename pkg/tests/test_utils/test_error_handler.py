"""Tests for Error Handler - Exception classes and utilities."""

import pytest

from sublattice.utils.error_handler import (
    ComplementSearchError,
    ConfigurationError,
    DegreeMismatchError,
    FilterError,
    GroupFileError,
    GroupTooLargeError,
    IncompleteLatticeError,
    NotAMemberError,
    NotASubgroupError,
    NotSolvableError,
    SublatticeError,
    ValidationError,
    VerificationError,
    format_error_response,
    get_user_friendly_error,
)


class TestSublatticeExceptionClasses:
    """Test cases for exception classes."""

    def test_sublattice_error_is_base(self):
        """Test SublatticeError is the base exception class."""
        error = SublatticeError("Test error")
        assert isinstance(error, Exception)
        assert str(error) == "Test error"
        assert error.user_message == "Test error"
        assert error.details == {}

    def test_sublattice_error_with_details(self):
        """Test SublatticeError with details."""
        error = SublatticeError("Test error", details={"key": "value"})
        assert error.details == {"key": "value"}

    def test_group_file_error_line(self):
        """Test GroupFileError carries the offending line."""
        error = GroupFileError(3, "cycle repeats a point")
        assert error.line == 3
        assert error.reason == "cycle repeats a point"
        assert "line 3" in str(error)
        assert "line 3" in error.user_message

    def test_group_file_error_without_line(self):
        """Test GroupFileError for whole-file problems."""
        error = GroupFileError(None, "missing degree")
        assert error.line is None
        assert "input" in str(error)

    def test_degree_mismatch_error(self):
        """Test DegreeMismatchError records both degrees."""
        error = DegreeMismatchError(4, 5)
        assert error.expected == 4
        assert error.actual == 5
        assert "expected 4" in str(error)

    def test_group_too_large_error(self):
        """Test GroupTooLargeError names the guard."""
        error = GroupTooLargeError(5040, 1000, "oracle limit")
        assert error.order == 5040
        assert error.limit == 1000
        assert "oracle limit" in str(error)

    def test_not_solvable_error(self):
        """Test NotSolvableError points at the lattice command."""
        error = NotSolvableError(60)
        assert error.order == 60
        assert "not solvable" in error.user_message
        assert "lattice" in error.user_message

    def test_verification_error(self):
        """Test VerificationError keeps both totals."""
        error = VerificationError(59, 58)
        assert error.expected == 59
        assert error.actual == 58
        assert "oracle 59" in str(error)
        assert "engine 58" in str(error)

    def test_validation_error(self):
        """Test ValidationError inherits from SublatticeError."""
        error = ValidationError(field="k", value=-1, reason="must be non-negative")
        assert isinstance(error, SublatticeError)
        assert error.field == "k"
        assert error.value == -1

    def test_configuration_error(self):
        """Test ConfigurationError inherits from SublatticeError."""
        error = ConfigurationError(setting="engine.oracle_limit", reason="must be positive")
        assert isinstance(error, SublatticeError)
        assert error.setting == "engine.oracle_limit"


class TestErrorFormatting:
    """Test cases for error formatting utilities."""

    def test_user_friendly_group_file(self):
        """Test GroupFileError formatting."""
        result = get_user_friendly_error(GroupFileError(2, "bad cycle"))
        assert "line 2" in result
        assert "bad cycle" in result

    def test_user_friendly_file_not_found(self):
        """Test missing file formatting."""
        error = FileNotFoundError(2, "No such file", "missing.grp")
        result = get_user_friendly_error(error)
        assert result == "File not found: missing.grp"

    def test_user_friendly_unicode(self):
        """Test undecodable input formatting."""
        error = UnicodeDecodeError("utf-8", b"\xff", 0, 1, "invalid start byte")
        assert "UTF-8" in get_user_friendly_error(error)

    def test_user_friendly_generic(self):
        """Test generic error formatting."""
        assert get_user_friendly_error(RuntimeError("boom")) == "Error: boom"
        assert get_user_friendly_error(RuntimeError()) == "Error: RuntimeError"

    def test_format_error_response(self):
        """Test error response formatting."""
        response = format_error_response(NotSolvableError(120))
        assert response.startswith("error: ")
        assert "120" in response


class TestExceptionHierarchy:
    """Test exception hierarchy is correct."""

    def test_exception_hierarchy(self):
        """Verify all exceptions derive from SublatticeError."""
        exceptions = [
            ValidationError,
            ConfigurationError,
            GroupFileError,
            DegreeMismatchError,
            GroupTooLargeError,
            NotAMemberError,
            NotASubgroupError,
            NotSolvableError,
            FilterError,
            IncompleteLatticeError,
            ComplementSearchError,
            VerificationError,
        ]

        for exc in exceptions:
            assert issubclass(exc, SublatticeError)

    def test_exception_can_be_caught_by_base(self):
        """Test that specific exceptions can be caught by base."""
        errors = [
            NotAMemberError("(1,5)"),
            NotASubgroupError("order 7"),
            FilterError("p-group:6", "6 is not prime"),
            IncompleteLatticeError("13 subgroups missing"),
            ComplementSearchError(2**30, 2**20),
        ]

        for error in errors:
            with pytest.raises(SublatticeError):
                raise error
