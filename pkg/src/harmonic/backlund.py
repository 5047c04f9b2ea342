"""2-step Backlund transforms: the lines ker(A_o) and im(Q_o) of a modified Hopf field."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.common.exceptions import HarmonicError
from src.common.logging import get_logger
from src.darboux import line_projectors
from src.moebius import CircleGrid
from src.quatlin import algebra

logger = get_logger(__name__)

# projector onto the line (1, 0)H = infinity
INFINITY = np.diag([1.0, 1.0, 0.0, 0.0]).astype(complex)


@dataclass(frozen=True)
class BacklundLines:
    """Pointwise lines in HP^1 as unit vectors of C^4, with their projectors and constancy residuals.

    ``valid`` is False where the form vanishes and the line is undefined.
    """

    kernel: np.ndarray
    image: np.ndarray
    kernel_projectors: np.ndarray
    image_projectors: np.ndarray
    kernel_residual: float
    image_residual: float
    valid: np.ndarray

    def constant_kernel(self, tol: float = 1e-8) -> bool:
        return self.kernel_residual < tol

    def constant_image(self, tol: float = 1e-8) -> bool:
        return self.image_residual < tol


def quaternionic_line(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Unit C^4 vector spanning (a, b)H for quaternion fields a, b."""
    v = algebra.complexify(algebra.qvec(a, b))
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def line_distance(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Frobenius distance between line projectors."""
    return np.linalg.norm(p - q, axis=(-2, -1))


def affine_point(v: np.ndarray, threshold: float = 1e-8) -> Optional[np.ndarray]:
    """Point a b^-1 of the line vH with v = (a, b), or None for infinity."""
    a, b = algebra.decomplexify(v)
    if algebra.qnorm(b) < threshold * np.linalg.norm(v):
        return None
    return algebra.hamilton(a, algebra.qinv(b))


def _constancy(projectors: np.ndarray, valid: np.ndarray) -> float:
    index = tuple(np.argwhere(valid)[0])
    return float(np.max(line_distance(projectors, projectors[index])[valid]))


def backlund_points(cg: CircleGrid, rank_tol: float = 1e-6, vanish_tol: float = 1e-10) -> BacklundLines:
    """ker(2*A_o) and im(2*Q_o) pointwise, from the SVD of the complex 4x4 matrices of both directions.

    Raises:
        HarmonicError: If A_o or Q_o has quaternionic rank 2 somewhere.
    """
    ex, ey = algebra.embed_qmat(cg.A2x), algebra.embed_qmat(cg.A2y)
    qx, qy = algebra.embed_qmat(cg.Q2x), algebra.embed_qmat(cg.Q2y)
    stacked_a = np.concatenate([ex, ey], axis=-2)
    stacked_q = np.concatenate([qx, qy], axis=-1)
    _, sa, vha = np.linalg.svd(stacked_a)
    uq, sq, _ = np.linalg.svd(stacked_q)

    mask = cg.hopf.frames.mask
    for name, s in (("A_o", sa), ("Q_o", sq)):
        top = np.where(s[..., 0] > 0, s[..., 0], 1.0)
        worst = float(np.max((s[..., 2] / top)[mask & (s[..., 0] > vanish_tol)], initial=0.0))
        if worst > rank_tol:
            raise HarmonicError(f"{name} has rank 2", {"singular_ratio": worst, "tol": rank_tol})

    valid = mask & (sa[..., 0] > vanish_tol) & (sq[..., 0] > vanish_tol)
    if not valid.any():
        raise HarmonicError("Modified Hopf field vanishes identically")
    kernel = np.conj(vha[..., -1, :])
    image = uq[..., :, 0]
    kp, ip = line_projectors(kernel), line_projectors(image)
    lines = BacklundLines(
        kernel=kernel,
        image=image,
        kernel_projectors=kp,
        image_projectors=ip,
        kernel_residual=_constancy(kp, valid),
        image_residual=_constancy(ip, valid),
        valid=valid,
    )
    logger.debug(
        "backlund_points",
        policy=cg.policy,
        kernel_residual=lines.kernel_residual,
        image_residual=lines.image_residual,
    )
    return lines
