"""Harmonic map reduction exceptions."""

from .base import CwHolonomyError


class HarmonicError(CwHolonomyError):
    """Raised when a normal field fails the harmonic or conformal preconditions."""
