"""Associated family exceptions."""

from .base import CwHolonomyError


class FamilyError(CwHolonomyError):
    """Raised when the associated family cannot be built or evaluated."""


class GaugeSingularError(FamilyError):
    """Raised when the gauge matrix between the primal and dual families is singular."""
