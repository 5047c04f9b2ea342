"""Exceptions module for the holonomy toolkit."""

from .base import CwHolonomyError
from .quaternion import QuaternionError
from .surface import SurfaceError, NotImmersedError, NonConformalError, DegreeResolutionError
from .moebius import MoebiusError, EtaValidationError
from .family import FamilyError, GaugeSingularError
from .holonomy import TransportError, ClassificationError
from .spectral import SpectralError, NoSpectralCurveError, TrackingAmbiguityError
from .darboux import DarbouxError
from .harmonic import HarmonicError
from .config import ConfigError, InputFileError

__all__ = [
    "CwHolonomyError",
    "QuaternionError",
    "SurfaceError",
    "NotImmersedError",
    "NonConformalError",
    "DegreeResolutionError",
    "MoebiusError",
    "EtaValidationError",
    "FamilyError",
    "GaugeSingularError",
    "TransportError",
    "ClassificationError",
    "SpectralError",
    "NoSpectralCurveError",
    "TrackingAmbiguityError",
    "DarbouxError",
    "HarmonicError",
    "ConfigError",
    "InputFileError",
]
