"""Mean curvature sphere congruence in the Euclidean chart."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.quatlin import algebra
from src.surface import FrameGrid


@dataclass(frozen=True)
class SphereCongruenceGrid:
    """S = Ad([[1, f], [0, 1]]) [[N, 0], [H, -R]] per point, shape (n1, n2, 2, 2, 4)."""

    S: np.ndarray
    f: np.ndarray
    mask: np.ndarray

    def square_residual(self) -> float:
        """max |S^2 + Id|."""
        defect = algebra.qmat_mul(self.S, self.S) + algebra.qmat_identity(self.S.shape[:-3])
        return float(np.max(algebra.qmat_norm(defect)[self.mask]))

    def line_residual(self) -> float:
        """Distance of S (f, 1) from the line (f, 1)H, i.e. SL = L."""
        line = algebra.qvec(self.f, np.broadcast_to(algebra.ONE, self.f.shape))
        image = algebra.qmat_apply(self.S, line)
        # S (f, 1) = (f, 1) * lam forces lam = second slot
        lam = image[..., 1, :]
        defect = image[..., 0, :] - algebra.hamilton(self.f, lam)
        return float(np.max(algebra.qnorm(defect)[self.mask]))

    def embedded(self) -> np.ndarray:
        """Complex 4x4 matrices of S."""
        return algebra.embed_qmat(self.S)


def chart_form(f: np.ndarray, a: np.ndarray, b: np.ndarray, c: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Ad([[1, f], [0, 1]]) [[a, b], [c, d]] for quaternion fields."""
    return algebra.chart_conjugate(f, algebra.qmat(a, b, c, d))


def mean_curvature_sphere(fg: FrameGrid) -> SphereCongruenceGrid:
    """Mean curvature sphere of the sampled immersion."""
    zero = np.zeros_like(fg.N)
    return SphereCongruenceGrid(S=chart_form(fg.f, fg.N, zero, fg.H, -fg.R), f=fg.f, mask=fg.mask)
