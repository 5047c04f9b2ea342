"""Sampled frames of a conformal torus: partials, Euclidean normals, mean curvature."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from src.common.exceptions import NonConformalError, NotImmersedError, SurfaceError
from src.common.logging import get_logger
from src.quatlin import algebra

from .generators import SurfaceSpec
from .lattice import TorusLattice
from .spectral_ops import lattice_gradient

logger = get_logger(__name__)

MIN_GRID = 8
MAX_MASKED_FRACTION = 0.01


@dataclass(frozen=True)
class FrameGrid:
    """Pointwise data of an immersion on an n1 x n2 lattice grid.

    Quaternion fields have shape (n1, n2, 4); ``mask`` is True where the
    immersion is regular. N = fy fx^-1 and R = -fx^-1 fy, so *df = N df = -df R
    with J d/dx = d/dy.
    """

    lattice: TorusLattice
    offset: tuple[float, float]
    f: np.ndarray
    fx: np.ndarray
    fy: np.ndarray
    N: np.ndarray
    R: np.ndarray
    H: np.ndarray
    Nx: np.ndarray
    Ny: np.ndarray
    Rx: np.ndarray
    Ry: np.ndarray
    Hx: np.ndarray
    Hy: np.ndarray
    conf_res: np.ndarray
    mask: np.ndarray
    masked_points: list[tuple[int, int]] = field(default_factory=list)

    @property
    def shape(self) -> tuple[int, int]:
        return self.f.shape[0], self.f.shape[1]

    @property
    def cell_area(self) -> float:
        return self.lattice.cell_area(*self.shape)

    def points(self) -> np.ndarray:
        return self.lattice.points(*self.shape, self.offset)

    def integrate(self, density: np.ndarray) -> float:
        """Periodic trapezoid rule over the fundamental domain, masked points skipped."""
        return float(np.sum(np.where(self.mask, density, 0.0)) * self.cell_area)

    def max_conformal_residual(self) -> float:
        return float(np.max(self.conf_res[self.mask]))

    def normal_relation_residual(self) -> float:
        """Relative defect of fy = N fx and fy = -fx R."""
        scale = algebra.qnorm(self.fx)
        left = algebra.qnorm(self.fy - algebra.hamilton(self.N, self.fx)) / scale
        right = algebra.qnorm(self.fy + algebra.hamilton(self.fx, self.R)) / scale
        return float(np.max(np.maximum(left, right)[self.mask]))

    def unit_residual(self) -> float:
        """Max deviation of |N| and |R| from 1."""
        dev = np.maximum(np.abs(algebra.qnorm(self.N) - 1.0), np.abs(algebra.qnorm(self.R) - 1.0))
        return float(np.max(dev[self.mask]))


def _fill_masked(values: np.ndarray, mask: np.ndarray) -> np.ndarray:
    """Replace values at masked points by the nearest regular value along the first axis."""
    if mask.all():
        return values
    out = values.copy()
    for shift in range(1, mask.shape[0]):
        todo = ~mask & np.roll(mask, shift, axis=0)
        out[todo] = np.roll(values, shift, axis=0)[todo]
        mask = mask | todo
        if mask.all():
            break
    return out


def conformality_residual(fx: np.ndarray, fy: np.ndarray) -> np.ndarray:
    """||fx| - |fy|| + |<fx, fy>|, both relative to |fx|."""
    nx = algebra.qnorm(fx)
    ny = algebra.qnorm(fy)
    safe = np.where(nx > 0, nx, 1.0)
    return np.abs(nx - ny) / safe + np.abs(np.sum(fx * fy, axis=-1)) / safe**2


def sample_frames(
    spec: SurfaceSpec,
    n1: int,
    n2: int,
    offset: tuple[float, float] = (0.0, 0.0),
    conformal_tol: float = 1e-6,
    immersion_threshold: float = 1e-8,
) -> FrameGrid:
    """Sample f with its partials and derive N, R and H on the grid."""
    if n1 < MIN_GRID or n2 < MIN_GRID:
        raise SurfaceError("Grid dims must be at least 8", {"n1": n1, "n2": n2})
    if spec.lattice.orientation < 0:
        logger.warning("negatively_oriented_lattice", note="left and right normals exchange roles")

    f, fx, fy = spec.evaluate_grid(n1, n2, offset)
    speed = algebra.qnorm(fx)
    scale = float(np.max(speed))
    mask = speed > immersion_threshold * max(scale, 1.0)
    masked = [tuple(int(i) for i in idx) for idx in np.argwhere(~mask)]
    if not mask.any():
        raise NotImmersedError("Surface is non-immersed everywhere", {"points": n1 * n2}, masked)
    if len(masked) >= MAX_MASKED_FRACTION * n1 * n2:
        raise NotImmersedError(
            "Too many non-immersed points", {"count": len(masked), "grid": n1 * n2}, masked
        )
    if masked:
        logger.warning("masked_points", count=len(masked))

    conf_res = conformality_residual(fx, fy)
    worst = float(np.max(np.where(mask, conf_res, 0.0)))
    if worst > conformal_tol:
        raise NonConformalError("Surface is not conformal", {"max_residual": worst, "tol": conformal_tol})

    fx_inv = algebra.qinv(np.where(mask[..., None], fx, algebra.ONE))
    N = _fill_masked(algebra.hamilton(fy, fx_inv), mask)
    R = _fill_masked(-algebra.hamilton(fx_inv, fy), mask)
    Nx, Ny = lattice_gradient(N, spec.lattice)
    Rx, Ry = lattice_gradient(R, spec.lattice)
    H = -0.5 * algebra.hamilton(fx_inv, Nx - algebra.hamilton(N, Ny))
    H = _fill_masked(H, mask)
    Hx, Hy = lattice_gradient(H, spec.lattice)

    logger.debug("frames_sampled", kind=spec.kind.value, dims=(n1, n2), conformal_residual=worst)
    return FrameGrid(
        lattice=spec.lattice,
        offset=offset,
        f=f,
        fx=fx,
        fy=fy,
        N=N,
        R=R,
        H=H,
        Nx=Nx,
        Ny=Ny,
        Rx=Rx,
        Ry=Ry,
        Hx=Hx,
        Hy=Hy,
        conf_res=conf_res,
        mask=mask,
        masked_points=masked,
    )


def finite_difference_partials(spec: SurfaceSpec, n1: int, n2: int) -> tuple[np.ndarray, np.ndarray]:
    """Second-order central differences of f mapped to (d/dx, d/dy)."""
    f, _, _ = spec.evaluate_grid(n1, n2)
    ds = (np.roll(f, -1, axis=0) - np.roll(f, 1, axis=0)) * (n1 / 2.0)
    dt = (np.roll(f, -1, axis=1) - np.roll(f, 1, axis=1)) * (n2 / 2.0)
    inv = np.linalg.inv(spec.lattice.basis)
    return inv[0, 0] * ds + inv[0, 1] * dt, inv[1, 0] * ds + inv[1, 1] * dt


@dataclass(frozen=True)
class CurvatureSummary:
    """Mean value of a curvature quantity and its drift from constancy."""

    mean: float
    drift: float
    ambient_defect: float


def sphere_mean_curvature(fg: FrameGrid) -> CurvatureSummary:
    """H^{S^3} = Re(H f + R), with drift including the imaginary part.

    ``ambient_defect`` is max ||f| - 1|.
    """
    value = algebra.hamilton(fg.H, fg.f) + fg.R
    mean = float(np.mean(value[..., 0][fg.mask]))
    drift = algebra.qnorm(value - mean * algebra.ONE)
    radius = np.abs(algebra.qnorm(fg.f) - 1.0)
    return CurvatureSummary(mean, float(np.max(drift[fg.mask])), float(np.max(radius[fg.mask])))


def euclidean_cmc_drift(fg: FrameGrid) -> CurvatureSummary:
    """Mean curvature of a surface in Im H = R^3: H is real and constant for CMC.

    ``ambient_defect`` is max |Re f|.
    """
    mean = float(np.mean(fg.H[..., 0][fg.mask]))
    drift = algebra.qnorm(fg.H - mean * algebra.ONE)
    return CurvatureSummary(mean, float(np.max(drift[fg.mask])), float(np.max(np.abs(fg.f[..., 0][fg.mask]))))
