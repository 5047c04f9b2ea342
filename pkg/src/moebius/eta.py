"""Modified Hopf fields A_o, Q_o for a chosen Lagrange multiplier."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.common.exceptions import EtaValidationError
from src.common.logging import get_logger
from src.common.types import Ambient
from src.quatlin import algebra
from src.surface.spectral_ops import lattice_gradient

from .hopf_fields import HopfGrid, left_recover, right_recover
from .policies import BaseEtaPolicy, CmcRho, CustomEta, HarmonicNormal, ZeroEta

logger = get_logger(__name__)


@dataclass(frozen=True)
class CircleGrid:
    """2*A_o and 2*Q_o per direction together with the fields they modify."""

    hopf: HopfGrid
    policy: str
    A2x: np.ndarray
    A2y: np.ndarray
    Q2x: np.ndarray
    Q2y: np.ndarray

    @property
    def S(self) -> np.ndarray:
        return self.hopf.sphere.S

    @property
    def mask(self) -> np.ndarray:
        return self.hopf.frames.mask

    def modified(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """(A_o x, A_o y, Q_o x, Q_o y)."""
        S = self.S
        return (
            left_recover(S, self.A2x),
            left_recover(S, self.A2y),
            right_recover(S, self.Q2x),
            right_recover(S, self.Q2y),
        )

    def star_residual(self) -> float:
        """max of |*A_o - S A_o| and |*Q_o - Q_o S|."""
        ax, ay, qx, qy = self.modified()
        a = algebra.qmat_norm(ay - algebra.qmat_mul(self.S, ax))
        q = algebra.qmat_norm(qy - algebra.qmat_mul(qx, self.S))
        return float(np.max(np.maximum(a, q)[self.mask]))

    def line_residual(self) -> float:
        """im(A_o) in L and L in ker(Q_o), measured in the chart where L = (0, 1)H."""
        f = self.hopf.frames.f
        worst = 0.0
        ax, ay, qx, qy = self.modified()
        for a in (ax, ay):
            chart = algebra.chart_conjugate(-f, a)
            top = np.sqrt(algebra.qnorm2(chart[..., 0, 0, :]) + algebra.qnorm2(chart[..., 0, 1, :]))
            worst = max(worst, float(np.max(top[self.mask])))
        for q in (qx, qy):
            chart = algebra.chart_conjugate(-f, q)
            right = np.sqrt(algebra.qnorm2(chart[..., 0, 1, :]) + algebra.qnorm2(chart[..., 1, 1, :]))
            worst = max(worst, float(np.max(right[self.mask])))
        return worst

    def sphere_derivative_residual(self) -> float:
        """max |dS - (2*Q_o - 2*A_o)| with dS from spectral differentiation."""
        Sx, Sy = lattice_gradient(self.S, self.hopf.frames.lattice)
        dx = algebra.qmat_norm(Sx - (self.Q2x - self.A2x))
        dy = algebra.qmat_norm(Sy - (self.Q2y - self.A2y))
        return float(np.max(np.maximum(dx, dy)[self.mask]))


def parse_policy(text: str, ambient: Ambient | str = Ambient.S3) -> BaseEtaPolicy:
    """Policy from its textual form: zero | cmc:RHO | harmonic:left|right | file:PATH."""
    head, _, tail = text.partition(":")
    if head == "zero" and not tail:
        return ZeroEta()
    if head == "cmc":
        try:
            return CmcRho(float(tail), ambient)
        except ValueError as exc:
            raise EtaValidationError(f"Invalid cmc parameter '{tail}'") from exc
    if head == "harmonic":
        try:
            return HarmonicNormal(tail)
        except ValueError as exc:
            raise EtaValidationError(f"Invalid harmonic side '{tail}'") from exc
    if head == "file" and tail:
        return CustomEta.from_file(tail)
    raise EtaValidationError(f"Unknown eta policy '{text}'")


def apply_eta(hg: HopfGrid, policy: BaseEtaPolicy, tol: float = 1e-6) -> CircleGrid:
    """Validate the policy on the surface and build the modified Hopf fields."""
    policy.validate(hg, tol)
    a2x, a2y, q2x, q2y = policy.modified_forms(hg)
    logger.debug("eta_applied", policy=policy.describe())
    return CircleGrid(hopf=hg, policy=policy.describe(), A2x=a2x, A2y=a2y, Q2x=q2x, Q2y=q2y)
