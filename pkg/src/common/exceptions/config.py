"""Configuration and input exceptions."""

from .base import CwHolonomyError


class ConfigError(CwHolonomyError):
    """Raised for invalid run configuration values."""


class InputFileError(CwHolonomyError):
    """Raised when an input file is missing, unreadable or malformed."""

    exit_code = 1
