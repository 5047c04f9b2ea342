"""Prolongation of rank-1 parallel sections into the 4x4 associated family.

With im(Q_o) = infinity the section psi = (1, 0) g + (f, 1) chi, where

    chi = pi''_R(R H g)(mu - 1)/2 + pi'_R(R H g)(mu^-1 - 1)/2,
    pi'_R(v) = (v - R v i)/2,  pi''_R(v) = (v + R v i)/2,

is parallel for the 4x4 family whenever g is parallel for the 2x2 family.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.common.exceptions import HarmonicError
from src.common.logging import get_logger
from src.darboux import ParallelSection
from src.family import MuForm, connection_form
from src.moebius import CircleGrid
from src.quatlin import algebra
from src.surface import FrameGrid, SurfaceSpec, moebius_image
from src.surface.spectral_ops import resample_axis

from .backlund import INFINITY, affine_point, backlund_points

logger = get_logger(__name__)


@dataclass(frozen=True)
class ProlongedSection:
    """C^4 field psi built from a rank-1 section and its parallel residual."""

    psi: np.ndarray
    chi: np.ndarray
    mu: complex
    residual: float


def infinity_chart(spec: SurfaceSpec, cg: CircleGrid, tol: float = 1e-8) -> SurfaceSpec:
    """Moebius image of spec in which the constant line im(Q_o) sits at infinity.

    The point p = im(Q_o) goes to infinity under f -> (f - p)^-1; spec is
    returned unchanged when p is already infinity.

    Raises:
        HarmonicError: If im(Q_o) is not constant.
    """
    lines = backlund_points(cg)
    if lines.image_residual > tol:
        raise HarmonicError("im(Q_o) is not constant", {"residual": lines.image_residual, "tol": tol})
    index = tuple(np.argwhere(lines.valid)[0])
    p = affine_point(lines.image[index])
    if p is None:
        return spec
    zero = np.zeros(4)
    matrix = algebra.qmat(zero, algebra.ONE, algebra.ONE, -p)
    logger.info("infinity_chart", point=[float(x) for x in p])
    return moebius_image(spec, matrix)


def chi_field(fg: FrameGrid, g: np.ndarray, mu: complex, swapped: bool = False) -> np.ndarray:
    """chi for a C^2 field g; `swapped` exchanges the two projectors."""
    mu = complex(mu)
    ER = algebra.quat_block(fg.R)
    eye = np.eye(2)
    holo, anti = 0.5 * (eye - 1j * ER), 0.5 * (eye + 1j * ER)
    if swapped:
        holo, anti = anti, holo
    rhg = np.einsum("...ab,...b->...a", algebra.quat_block(algebra.hamilton(fg.R, fg.H)), g)
    return 0.5 * (mu - 1.0) * np.einsum("...ab,...b->...a", anti, rhg) + 0.5 * (1.0 / mu - 1.0) * np.einsum(
        "...ab,...b->...a", holo, rhg
    )


def _parallel_residual(mf: MuForm, mu: complex, psi: np.ndarray, base_point: tuple[int, int]) -> float:
    """Largest |(psi(q) - psi(p))/|step| + Omega_mid (psi(p) + psi(q))/2| over edges off the seams, relative to max |psi|."""
    n1, n2 = mf.shape
    i0, j0 = base_point
    worst = 0.0
    for axis, n, step in ((0, n1, mf.lattice.tau1 / n1), (1, n2, mf.lattice.tau2 / n2)):
        w_mid = resample_axis(mf.along(mu, step), n, axis=axis, shift=0.5)
        nxt = np.roll(psi, -1, axis=axis)
        defect = (nxt - psi) + np.einsum("ijab,ijb->ija", w_mid, 0.5 * (psi + nxt))
        keep = mf.mask & np.roll(mf.mask, -1, axis=axis)
        if axis == 0:
            keep[(i0 - 1) % n1, :] = False
        else:
            keep[:, (j0 - 1) % n2] = False
        worst = max(worst, float(np.max(np.linalg.norm(defect, axis=-1)[keep])) / abs(step))
    return worst / float(np.max(np.linalg.norm(psi, axis=-1)))


def prolong_embed(
    section: ParallelSection,
    cg: CircleGrid,
    swapped: bool = False,
    tol: float = 1e-8,
) -> ProlongedSection:
    """psi = (g + f chi, chi) for a 2x2 parallel section g, with its 4x4 parallel residual.

    Raises:
        HarmonicError: If the section is not 2-dimensional or im(Q_o) is not infinity.
    """
    if section.psi.shape[-1] != 2:
        raise HarmonicError("Prolongation needs a section of the 2x2 family", {"dim": section.psi.shape[-1]})
    lines = backlund_points(cg)
    distance = float(np.max(np.linalg.norm(lines.image_projectors - INFINITY, axis=(-2, -1))[lines.valid]))
    if distance > np.sqrt(tol):
        raise HarmonicError("im(Q_o) is not the point at infinity; use infinity_chart first", {"distance": distance})

    fg = cg.hopf.frames
    mu = section.mu
    g = section.psi
    chi = chi_field(fg, g, mu, swapped)
    top = g + np.einsum("...ab,...b->...a", algebra.quat_block(fg.f), chi)
    psi = np.concatenate([top, chi], axis=-1)
    residual = _parallel_residual(connection_form(cg), mu, psi, section.base_point)
    logger.debug("prolong_embed", mu=str(mu), swapped=swapped, residual=residual)
    return ProlongedSection(psi=psi, chi=chi, mu=mu, residual=residual)
