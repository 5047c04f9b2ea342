"""Euler-Lagrange residual of the constrained Willmore equation."""

import numpy as np

from src.quatlin import algebra
from src.surface import plaquette_curl

from .eta import CircleGrid


def el_residual(cg: CircleGrid) -> float:
    """Max over plaquettes of |d(2*A_o)| for the trivial connection of the chart."""
    curl = plaquette_curl(cg.A2x, cg.A2y, cg.hopf.frames.lattice)
    mask = cg.mask & np.roll(cg.mask, -1, 0) & np.roll(cg.mask, -1, 1)
    mask &= np.roll(np.roll(cg.mask, -1, 0), -1, 1)
    return float(np.max(algebra.qmat_norm(curl)[mask]))
