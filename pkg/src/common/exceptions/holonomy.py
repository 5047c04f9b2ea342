"""Transport and holonomy exceptions."""

from .base import CwHolonomyError


class TransportError(CwHolonomyError):
    """Raised when parallel transport does not reach the requested accuracy."""


class ClassificationError(CwHolonomyError):
    """Raised when a holonomy classification cannot be carried out."""

    exit_code = 3
