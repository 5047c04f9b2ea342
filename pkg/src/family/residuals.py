"""Flatness and quaternionic symmetry residuals of an associated family."""

from __future__ import annotations

import numpy as np

from src.common.exceptions import FamilyError
from src.common.logging import get_logger
from src.quatlin import algebra
from src.surface.spectral_ops import resample_axis

from .muform import MuForm

logger = get_logger(__name__)


def rk4_step(T: np.ndarray, start: np.ndarray, mid: np.ndarray, end: np.ndarray) -> np.ndarray:
    """One RK4 step of T' = -W(t) T over t in [0, 1] given W at 0, 1/2 and 1."""
    k1 = -start @ T
    k2 = -mid @ (T + 0.5 * k1)
    k3 = -mid @ (T + 0.5 * k2)
    k4 = -end @ (T + k3)
    return T + (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0


def plaquette_holonomies(mf: MuForm, mu: complex) -> np.ndarray:
    """Transport once around every grid cell (s then t, back s, back t), shape (n1, n2, d, d)."""
    n1, n2 = mf.shape
    step1 = mf.lattice.tau1 / n1
    step2 = mf.lattice.tau2 / n2
    w1 = mf.along(mu, step1)
    w2 = mf.along(mu, step2)
    w1_mid = resample_axis(w1, n1, axis=0, shift=0.5)
    w2_mid = resample_axis(w2, n2, axis=1, shift=0.5)

    def shift(a: np.ndarray, di: int, dj: int) -> np.ndarray:
        return np.roll(a, (-di, -dj), axis=(0, 1))

    T = np.broadcast_to(np.eye(mf.dim, dtype=complex), w1.shape).copy()
    # (i, j) -> (i+1, j) -> (i+1, j+1) -> (i, j+1) -> (i, j)
    T = rk4_step(T, w1, w1_mid, shift(w1, 1, 0))
    T = rk4_step(T, shift(w2, 1, 0), shift(w2_mid, 1, 0), shift(w2, 1, 1))
    T = rk4_step(T, -shift(w1, 1, 1), -shift(w1_mid, 0, 1), -shift(w1, 0, 1))
    T = rk4_step(T, -shift(w2, 0, 1), -w2_mid, -w2)
    return T


def flatness_residual(mf: MuForm, mu: complex) -> float:
    """Max over unmasked cells of |cell holonomy - Id| / cell area."""
    H = plaquette_holonomies(mf, mu)
    defect = np.linalg.norm(H - np.eye(mf.dim), axis=(-2, -1))
    m = mf.mask
    cells = m & np.roll(m, -1, 0) & np.roll(m, -1, 1) & np.roll(m, (-1, -1), (0, 1))
    if not cells.any():
        raise FamilyError("No unmasked grid cell")
    area = abs(mf.lattice.cell_area(*mf.shape))
    residual = float(np.max(defect[cells]) / area)
    logger.debug("flatness_residual", mu=str(complex(mu)), kind=mf.kind, residual=residual)
    return residual


def j_conjugate(m: np.ndarray) -> np.ndarray:
    """J conj(m) J^-1 for complex matrices of any even size."""
    d = m.shape[-1]
    if d == 4:
        return algebra.conjugate_by_j(m)
    if d % 2:
        raise FamilyError("Quaternionic structure needs an even dimension", {"dim": d})
    jm = np.kron(np.eye(d // 2), algebra.J_MATRIX[:2, :2])
    return jm @ np.conj(m) @ jm.T


def symmetry_residual(mf: MuForm, mu: complex) -> float:
    """Max norm of Omega(1/conj(mu)) - J conj(Omega(mu)) J^-1 over points and directions."""
    mu = complex(mu)
    ox, oy = mf.evaluate(mu)
    rx, ry = mf.evaluate(1.0 / np.conj(mu))
    dx = np.linalg.norm(rx - j_conjugate(ox), axis=(-2, -1))
    dy = np.linalg.norm(ry - j_conjugate(oy), axis=(-2, -1))
    return float(np.max(np.maximum(dx, dy)[mf.mask]))
