"""Hopf fields A and Q of a conformal immersion in the Euclidean chart.

With T = [[1, f], [0, 1]] and dN'' = (dN + N *dN)/2, dR'' likewise,

    2*A = Ad T [[0, 0], [w, dR'']]
    2*Q = Ad T [[dN'', 0], [w + dH, 0]]
    w   = (-dH - R *dH + H *dN'')/2

and A = -S (2*A)/2, Q = -(2*Q) S/2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.quatlin import algebra
from src.surface import FrameGrid, star

from .sphere import SphereCongruenceGrid, chart_form


@dataclass(frozen=True)
class HopfGrid:
    """Hopf fields per point and direction; matrix fields have shape (n1, n2, 2, 2, 4)."""

    frames: FrameGrid
    sphere: SphereCongruenceGrid
    A2x: np.ndarray
    A2y: np.ndarray
    Q2x: np.ndarray
    Q2y: np.ndarray
    wx: np.ndarray
    wy: np.ndarray
    dN2x: np.ndarray
    dN2y: np.ndarray
    dR2x: np.ndarray
    dR2y: np.ndarray

    @property
    def Ax(self) -> np.ndarray:
        return left_recover(self.sphere.S, self.A2x)

    @property
    def Ay(self) -> np.ndarray:
        return left_recover(self.sphere.S, self.A2y)

    @property
    def Qx(self) -> np.ndarray:
        return right_recover(self.sphere.S, self.Q2x)

    @property
    def Qy(self) -> np.ndarray:
        return right_recover(self.sphere.S, self.Q2y)

    def vanishing(self, tol: float = 1e-10) -> str | None:
        """'A' or 'Q' if that Hopf field vanishes identically (super conformal), else None."""
        mask = self.frames.mask
        a = max(np.max(algebra.qmat_norm(self.A2x)[mask]), np.max(algebra.qmat_norm(self.A2y)[mask]))
        q = max(np.max(algebra.qmat_norm(self.Q2x)[mask]), np.max(algebra.qmat_norm(self.Q2y)[mask]))
        if a < tol:
            return "A"
        if q < tol:
            return "Q"
        return None


def left_recover(S: np.ndarray, form2star: np.ndarray) -> np.ndarray:
    """A from 2*A using *A = S A and S^2 = -1."""
    return -0.5 * algebra.qmat_mul(S, form2star)


def right_recover(S: np.ndarray, form2star: np.ndarray) -> np.ndarray:
    """Q from 2*Q using *Q = Q S and S^2 = -1."""
    return -0.5 * algebra.qmat_mul(form2star, S)


def double_prime(U: np.ndarray, Ux: np.ndarray, Uy: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Components of dU'' = (dU + U *dU)/2."""
    sx, sy = star(Ux, Uy)
    return 0.5 * (Ux + algebra.hamilton(U, sx)), 0.5 * (Uy + algebra.hamilton(U, sy))


def hopf_fields(fg: FrameGrid, sg: SphereCongruenceGrid) -> HopfGrid:
    """Hopf fields from the chart formulas."""
    dN2x, dN2y = double_prime(fg.N, fg.Nx, fg.Ny)
    dR2x, dR2y = double_prime(fg.R, fg.Rx, fg.Ry)
    star_hx, star_hy = star(fg.Hx, fg.Hy)
    star_nx, star_ny = star(dN2x, dN2y)
    wx = 0.5 * (-fg.Hx - algebra.hamilton(fg.R, star_hx) + algebra.hamilton(fg.H, star_nx))
    wy = 0.5 * (-fg.Hy - algebra.hamilton(fg.R, star_hy) + algebra.hamilton(fg.H, star_ny))
    zero = np.zeros_like(fg.f)
    return HopfGrid(
        frames=fg,
        sphere=sg,
        A2x=chart_form(fg.f, zero, zero, wx, dR2x),
        A2y=chart_form(fg.f, zero, zero, wy, dR2y),
        Q2x=chart_form(fg.f, dN2x, zero, wx + fg.Hx, zero),
        Q2y=chart_form(fg.f, dN2y, zero, wy + fg.Hy, zero),
        wx=wx,
        wy=wy,
        dN2x=dN2x,
        dN2y=dN2y,
        dR2x=dR2x,
        dR2y=dR2y,
    )
