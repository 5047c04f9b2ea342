"""Surface model exceptions."""

from .base import CwHolonomyError


class SurfaceError(CwHolonomyError):
    """Raised when a surface specification or its sampling is invalid."""


class NotImmersedError(SurfaceError):
    """Raised when too many grid points have a vanishing differential."""

    def __init__(self, message: str, details: dict | None = None, points: list | None = None):
        """Initialize the error.

        Args:
            message: Error message
            details: Optional additional error details
            points: Grid indices of the non-immersed points
        """
        super().__init__(message, details)
        self.points = points or []


class NonConformalError(SurfaceError):
    """Raised when the sampled immersion is not conformal within tolerance."""


class DegreeResolutionError(SurfaceError):
    """Raised when a mapping degree cannot be resolved on the grid."""
