"""Exceptions of the Moebius-geometric layer (sphere congruence, Hopf fields, multipliers)."""

from .base import CwHolonomyError


class MoebiusError(CwHolonomyError):
    """Raised for inconsistent frame, sphere or Hopf field grids."""


class EtaValidationError(MoebiusError):
    """Raised when a Lagrange multiplier policy is not admissible for the surface."""
