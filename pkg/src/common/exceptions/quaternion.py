"""Quaternion algebra exceptions."""

from .base import CwHolonomyError


class QuaternionError(CwHolonomyError):
    """Raised for singular quaternions or malformed quaternionic arrays."""
