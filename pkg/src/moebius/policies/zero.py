"""Zero multiplier: the Willmore case."""

from .base import BaseEtaPolicy, FormQuad
from ..hopf_fields import HopfGrid


class ZeroEta(BaseEtaPolicy):
    """eta = 0, so A_o = A and Q_o = Q."""

    name = "zero"

    def modified_forms(self, hg: HopfGrid) -> FormQuad:
        return hg.A2x, hg.A2y, hg.Q2x, hg.Q2y
