"""Base Lagrange multiplier policy."""

from abc import ABC, abstractmethod

import numpy as np

from ..hopf_fields import HopfGrid

FormQuad = tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


class BaseEtaPolicy(ABC):
    """A rule producing the modified fields 2*A_o = 2*A + eta and 2*Q_o = 2*Q + eta."""

    name: str = "base"

    @abstractmethod
    def modified_forms(self, hg: HopfGrid) -> FormQuad:
        """Return the x/y components of 2*A_o and 2*Q_o.

        Args:
            hg: Hopf fields of the surface.

        Returns:
            (A2x, A2y, Q2x, Q2y) as (n1, n2, 2, 2, 4) arrays.
        """
        pass

    def validate(self, hg: HopfGrid, tol: float) -> None:
        """Raise if the surface does not admit this policy. No checks by default."""

    def describe(self) -> str:
        return self.name
