"""Spectral curve exceptions."""

from .base import CwHolonomyError


class SpectralError(CwHolonomyError):
    """Raised when spectral data cannot be extracted."""

    exit_code = 4


class NoSpectralCurveError(SpectralError):
    """Raised for unipotent (Case III) holonomy, which has no nontrivial spectral curve."""


class TrackingAmbiguityError(SpectralError):
    """Raised when eigenvalue continuation cannot tell two sheets apart."""

    exit_code = 2
