"""Multipliers of tori with a harmonic Euclidean normal."""

import numpy as np

from src.common.exceptions import EtaValidationError
from src.common.types import HarmonicSide

from .base import BaseEtaPolicy, FormQuad
from ..hopf_fields import HopfGrid
from ..sphere import chart_form


class HarmonicNormal(BaseEtaPolicy):
    """eta chosen so that im(Q_o) = infinity (left normal harmonic) or ker(A_o) = infinity (right).

    left:  2*A_o = Ad T [[0, 0], [-dH, dR'']], 2*Q_o = Ad T [[dN'', 0], [0, 0]]
    right: 2*A_o = Ad T [[0, 0], [0, dR'']],   2*Q_o = Ad T [[dN'', 0], [dH, 0]]
    """

    def __init__(self, side: HarmonicSide | str = HarmonicSide.LEFT, check: bool = True):
        self.side = HarmonicSide(side)
        self.check = check
        self.name = f"harmonic:{self.side.value}"

    def validate(self, hg: HopfGrid, tol: float) -> None:
        if not self.check:
            return
        from src.harmonic.normals import harmonicity_residual

        fg = hg.frames
        normal = fg.N if self.side == HarmonicSide.LEFT else fg.R
        residual = harmonicity_residual(normal, fg.lattice, method="spectral", mask=fg.mask)
        if residual > tol:
            raise EtaValidationError(
                f"{self.side.value} normal is not harmonic", {"residual": residual, "tol": tol}
            )

    def modified_forms(self, hg: HopfGrid) -> FormQuad:
        fg = hg.frames
        zero = np.zeros_like(fg.f)
        if self.side == HarmonicSide.LEFT:
            a2 = [chart_form(fg.f, zero, zero, -dh, dr) for dh, dr in ((fg.Hx, hg.dR2x), (fg.Hy, hg.dR2y))]
            q2 = [chart_form(fg.f, dn, zero, zero, zero) for dn in (hg.dN2x, hg.dN2y)]
        else:
            a2 = [chart_form(fg.f, zero, zero, zero, dr) for dr in (hg.dR2x, hg.dR2y)]
            q2 = [chart_form(fg.f, dn, zero, dh, zero) for dn, dh in ((hg.dN2x, fg.Hx), (hg.dN2y, fg.Hy))]
        return a2[0], a2[1], q2[0], q2[1]
