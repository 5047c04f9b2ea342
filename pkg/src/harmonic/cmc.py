"""The rho-family of multipliers of CMC tori in R^3 and S^3."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.common.logging import get_logger
from src.common.types import Ambient
from src.moebius import CircleGrid, CmcRho, HopfGrid, apply_eta, chart_form, hopf_fields, mean_curvature_sphere
from src.moebius.hopf_fields import double_prime
from src.quatlin import algebra
from src.surface import FrameGrid, euclidean_cmc_drift, sphere_mean_curvature

logger = get_logger(__name__)


@dataclass(frozen=True)
class CmcData:
    """Mean curvature of a CMC torus in its space form and the chosen rho."""

    ambient: Ambient
    mean_curvature: float
    rho: float
    drift: float


def cmc_data(fg: FrameGrid, ambient: Ambient | str = Ambient.S3, rho: float = 0.0) -> CmcData:
    ambient = Ambient(ambient)
    summary = sphere_mean_curvature(fg) if ambient == Ambient.S3 else euclidean_cmc_drift(fg)
    return CmcData(ambient=ambient, mean_curvature=summary.mean, rho=float(rho), drift=summary.drift)


def cmc_eta_family(
    fg: FrameGrid,
    ambient: Ambient | str = Ambient.S3,
    rho: float = 0.0,
    tol: float = 1e-6,
) -> CircleGrid:
    """Closed-form 2*A_o^rho and 2*Q_o^rho of a CMC torus.

    Raises:
        EtaValidationError: If f is not CMC in the stated ambient space within tol.
    """
    hg = hopf_fields(fg, mean_curvature_sphere(fg))
    cg = apply_eta(hg, CmcRho(rho, ambient), tol)
    logger.debug("cmc_family_built", ambient=Ambient(ambient).value, rho=rho)
    return cg


def cmc_omega(hg: HopfGrid, ambient: Ambient | str = Ambient.S3) -> tuple[np.ndarray, np.ndarray]:
    """The closed form omega = Ad T [[0, 0], [dH, 0]] (S^3) or Ad T [[0, 0], [dN'', 0]] (R^3)."""
    fg = hg.frames
    zero = np.zeros_like(fg.f)
    if Ambient(ambient) == Ambient.S3:
        lower = (fg.Hx, fg.Hy)
    else:
        lower = (hg.dN2x, hg.dN2y)
    return tuple(chart_form(fg.f, zero, zero, c, zero) for c in lower)


def eta0(hg: HopfGrid, ambient: Ambient | str = Ambient.S3) -> tuple[np.ndarray, np.ndarray]:
    """eta_0 with 2*A_o^rho = 2*A + eta_0 + rho omega.

    S^3: eta_0 = H^{S^3} S omega / 2.  R^3: eta_0 = -H *omega / 2.
    """
    ambient = Ambient(ambient)
    fg = hg.frames
    wx, wy = cmc_omega(hg, ambient)
    if ambient == Ambient.S3:
        h = sphere_mean_curvature(fg).mean
        S = hg.sphere.S
        return 0.5 * h * algebra.qmat_mul(S, wx), 0.5 * h * algebra.qmat_mul(S, wy)
    h = euclidean_cmc_drift(fg).mean
    # *omega = (omega_y, -omega_x)
    return -0.5 * h * wy, 0.5 * h * wx


def dual_curvature_residual(fg: FrameGrid) -> float:
    """max |dH + dR'' f^-1| relative to max |dR''|; zero for CMC tori in S^3."""
    dR2x, dR2y = double_prime(fg.R, fg.Rx, fg.Ry)
    f_inv = algebra.qinv(fg.f)
    defect = np.maximum(
        algebra.qnorm(fg.Hx + algebra.hamilton(dR2x, f_inv)),
        algebra.qnorm(fg.Hy + algebra.hamilton(dR2y, f_inv)),
    )
    scale = max(1.0, float(np.max(algebra.qnorm(dR2x))), float(np.max(algebra.qnorm(dR2y))))
    return float(np.max(defect[fg.mask]) / scale)
