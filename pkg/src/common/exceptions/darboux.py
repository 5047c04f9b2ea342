"""Darboux transform exceptions."""

from .base import CwHolonomyError


class DarbouxError(CwHolonomyError):
    """Raised when a parallel section yields a degenerate Darboux transform."""

    exit_code = 5
