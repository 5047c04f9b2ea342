"""Willmore energy from the Hopf fields and the degree of the normal bundle."""

from __future__ import annotations

import numpy as np

from src.common.logging import get_logger
from src.quatlin import algebra
from src.surface import FrameGrid, degree

from .hopf_fields import HopfGrid

logger = get_logger(__name__)


def _pairing_density(bx: np.ndarray, by: np.ndarray) -> np.ndarray:
    """<B ^ *B>(d/dx, d/dy) = -<Bx^2 + By^2> with <X> = Re(X11 + X22)."""
    return -(algebra.quarter_real_trace(algebra.qmat_mul(bx, bx)) + algebra.quarter_real_trace(algebra.qmat_mul(by, by)))


def hopf_energy(hg: HopfGrid, side: str = "A") -> float:
    """2 * integral of <A ^ *A> (side 'A') or <Q ^ *Q> (side 'Q')."""
    if side == "A":
        bx, by = hg.Ax, hg.Ay
    elif side == "Q":
        bx, by = hg.Qx, hg.Qy
    else:
        raise ValueError(f"side must be 'A' or 'Q', got {side!r}")
    return 2.0 * hg.frames.integrate(_pairing_density(bx, by))


def willmore_energy(hg: HopfGrid, deg_perp: int) -> float:
    """W = 2 int <A ^ *A> - 2 pi deg_perp."""
    return hopf_energy(hg, "A") - 2.0 * np.pi * deg_perp


def willmore_energy_dual(hg: HopfGrid, deg_perp: int) -> float:
    """W = 2 int <Q ^ *Q> + 2 pi deg_perp."""
    return hopf_energy(hg, "Q") + 2.0 * np.pi * deg_perp


def degree_from_energies(hg: HopfGrid) -> float:
    """deg_perp implied by the difference of the two energy quadratures."""
    return (hopf_energy(hg, "A") - hopf_energy(hg, "Q")) / (4.0 * np.pi)


def normal_degree(fg: FrameGrid) -> int:
    """deg(N) - deg(R)."""
    orientation = fg.lattice.orientation
    deg_n = degree(fg.N, orientation)
    deg_r = degree(fg.R, orientation)
    logger.debug("normal_degrees", deg_n=deg_n.value, deg_r=deg_r.value, drift=max(deg_n.drift, deg_r.drift))
    return deg_n.value - deg_r.value
