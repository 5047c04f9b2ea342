"""Closed-form multiplier families of constant mean curvature tori."""

import numpy as np

from src.common.exceptions import EtaValidationError
from src.common.logging import get_logger
from src.common.types import Ambient
from src.surface import euclidean_cmc_drift, sphere_mean_curvature

from .base import BaseEtaPolicy, FormQuad
from ..hopf_fields import HopfGrid
from ..sphere import chart_form

logger = get_logger(__name__)


class CmcRho(BaseEtaPolicy):
    """The rho-family of multipliers of a CMC torus in S^3 or R^3.

    S^3: 2*A_o = Ad T [[0, 0], [(rho - 1/2) dH, dR'']], 2*Q_o = Ad T [[dN'', 0], [(rho + 1/2) dH, 0]].
    R^3: 2*A_o = Ad T [[0, 0], [rho dN'', dN'']],        2*Q_o = Ad T [[dN'', 0], [rho dN'', 0]].
    """

    def __init__(self, rho: float, ambient: Ambient | str = Ambient.S3, check: bool = True):
        """
        Initialize the policy.

        Args:
            rho: Family parameter.
            ambient: Space form the surface has constant mean curvature in.
            check: Whether validate() checks the CMC condition.
        """
        self.rho = float(rho)
        self.ambient = Ambient(ambient)
        self.check = check
        self.name = f"cmc:{self.rho:g}"

    def validate(self, hg: HopfGrid, tol: float) -> None:
        if not self.check:
            return
        fg = hg.frames
        summary = sphere_mean_curvature(fg) if self.ambient == Ambient.S3 else euclidean_cmc_drift(fg)
        if summary.ambient_defect > tol:
            raise EtaValidationError(
                f"Surface does not lie in {self.ambient.value}",
                {"defect": summary.ambient_defect, "tol": tol},
            )
        if summary.drift > tol:
            raise EtaValidationError(
                "Mean curvature is not constant",
                {"ambient": self.ambient.value, "drift": summary.drift, "tol": tol},
            )
        logger.debug("cmc_validated", ambient=self.ambient.value, mean_curvature=summary.mean)

    def modified_forms(self, hg: HopfGrid) -> FormQuad:
        fg = hg.frames
        zero = np.zeros_like(fg.f)
        if self.ambient == Ambient.S3:
            lower_a = [(self.rho - 0.5) * fg.Hx, (self.rho - 0.5) * fg.Hy]
            lower_q = [(self.rho + 0.5) * fg.Hx, (self.rho + 0.5) * fg.Hy]
            right = [hg.dR2x, hg.dR2y]
        else:
            lower_a = [self.rho * hg.dN2x, self.rho * hg.dN2y]
            lower_q = lower_a
            right = [hg.dN2x, hg.dN2y]
        dn = [hg.dN2x, hg.dN2y]
        a2 = [chart_form(fg.f, zero, zero, lower_a[k], right[k]) for k in range(2)]
        q2 = [chart_form(fg.f, dn[k], zero, lower_q[k], zero) for k in range(2)]
        return a2[0], a2[1], q2[0], q2[1]
