"""Torus immersions into H: analytic families, sampled grids and Moebius images."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any

import numpy as np

from src.common.exceptions import SurfaceError
from src.common.logging import get_logger
from src.common.types import SurfaceKind
from src.quatlin import algebra

from .lattice import TorusLattice
from .spectral_ops import lattice_gradient, resample_grid

logger = get_logger(__name__)

Triple = tuple[np.ndarray, np.ndarray, np.ndarray]


class SurfaceSpec(ABC):
    """A doubly periodic conformal map f: C/Gamma -> H.

    Subclasses return (f, fx, fy) on the lattice grid; analytic kinds use
    exact derivative closures, sampled data uses spectral differentiation.
    """

    kind: SurfaceKind

    def __init__(self, lattice: TorusLattice, params: dict[str, Any] | None = None):
        self.lattice = lattice
        self.params = dict(params or {})

    @abstractmethod
    def evaluate_grid(self, n1: int, n2: int, offset: tuple[float, float] = (0.0, 0.0)) -> Triple:
        """Return f, fx, fy with shape (n1, n2, 4)."""

    def describe(self) -> dict[str, Any]:
        return {"kind": self.kind.value, "params": self.params, "lattice": self.lattice.as_dict()}


class AnalyticSurface(SurfaceSpec):
    """Surfaces given by closed forms in z = x + iy."""

    @abstractmethod
    def evaluate_points(self, x: np.ndarray, y: np.ndarray) -> Triple:
        """f, fx, fy at arbitrary domain points."""

    def evaluate_grid(self, n1: int, n2: int, offset: tuple[float, float] = (0.0, 0.0)) -> Triple:
        z = self.lattice.points(n1, n2, offset)
        return self.evaluate_points(z.real, z.imag)


class HomogeneousSurface(AnalyticSurface):
    """f = r e^{ix/r} + j s e^{iy/s} with s = sqrt(1 - r^2); the Clifford torus at r = 1/sqrt(2)."""

    kind = SurfaceKind.HOMOGENEOUS

    def __init__(self, r: float):
        if not 0.0 < r < 1.0:
            raise SurfaceError("Homogeneous torus radius must lie in (0, 1)", {"r": r})
        self.r = float(r)
        self.s = float(np.sqrt(1.0 - r * r))
        super().__init__(TorusLattice(2 * np.pi * self.r, 2j * np.pi * self.s), {"r": self.r})

    def evaluate_points(self, x: np.ndarray, y: np.ndarray) -> Triple:
        ex = np.exp(1j * x / self.r)
        ey = np.exp(1j * y / self.s)
        f = algebra.from_pair(self.r * ex, self.s * ey)
        fx = algebra.from_pair(1j * ex, 0.0)
        fy = algebra.from_pair(np.zeros_like(ex), 1j * ey)
        return f, fx, fy

    @property
    def sphere_mean_curvature(self) -> float:
        """Closed form (s/r - r/s)/2 of the mean curvature in S^3."""
        return 0.5 * (self.s / self.r - self.r / self.s)


class CliffordSurface(HomogeneousSurface):
    kind = SurfaceKind.CLIFFORD

    def __init__(self) -> None:
        super().__init__(1.0 / np.sqrt(2.0))
        self.params = {}


class HslSurface(AnalyticSurface):
    """Hamiltonian stationary Lagrangian torus with linear angle beta = a x + b y.

    f = (1/a) e^{iax} + j (1/b) e^{iby}, right normal R = j e^{i(ax + by)}.
    """

    kind = SurfaceKind.HSL

    def __init__(self, a: float = 1.0, b: float = 1.0):
        if a <= 0 or b <= 0:
            raise SurfaceError("Angle covector coefficients must be positive", {"a": a, "b": b})
        self.a = float(a)
        self.b = float(b)
        super().__init__(TorusLattice(2 * np.pi / self.a, 2j * np.pi / self.b), {"a": self.a, "b": self.b})

    def evaluate_points(self, x: np.ndarray, y: np.ndarray) -> Triple:
        ex = np.exp(1j * self.a * x)
        ey = np.exp(1j * self.b * y)
        f = algebra.from_pair(ex / self.a, ey / self.b)
        fx = algebra.from_pair(1j * ex, 0.0)
        fy = algebra.from_pair(np.zeros_like(ex), 1j * ey)
        return f, fx, fy


class SampledSurface(SurfaceSpec):
    """Grid data f on the fundamental domain, interpolated trigonometrically."""

    kind = SurfaceKind.SAMPLED

    def __init__(self, lattice: TorusLattice, values: np.ndarray, source: str | None = None):
        values = np.asarray(values, dtype=float)
        if values.ndim != 3 or values.shape[-1] != 4:
            raise SurfaceError("Sampled surface must have shape (n1, n2, 4)", {"shape": values.shape})
        super().__init__(lattice, {"dims": list(values.shape[:2]), "source": source})
        self.values = values

    def evaluate_grid(self, n1: int, n2: int, offset: tuple[float, float] = (0.0, 0.0)) -> Triple:
        m1, m2 = self.values.shape[:2]
        if (n1, n2) != (m1, m2) or any(offset):
            logger.debug("resampling_surface", source_dims=(m1, m2), target_dims=(n1, n2))
        f = resample_grid(self.values, n1, n2, offset)
        fx, fy = lattice_gradient(f, self.lattice)
        return f, fx, fy


class MoebiusImageSurface(SurfaceSpec):
    """f~ = (M11 f + M12)(M21 f + M22)^-1 for a constant quaternionic matrix M."""

    kind = SurfaceKind.MOEBIUS_IMAGE

    def __init__(self, base: SurfaceSpec, matrix: np.ndarray):
        matrix = np.asarray(matrix, dtype=float)
        if matrix.shape != (2, 2, 4):
            raise SurfaceError("Moebius matrix must have shape (2, 2, 4)", {"shape": matrix.shape})
        super().__init__(base.lattice, {"base": base.describe(), "matrix": matrix.tolist()})
        self.base = base
        self.matrix = matrix

    def evaluate_grid(self, n1: int, n2: int, offset: tuple[float, float] = (0.0, 0.0)) -> Triple:
        f, fx, fy = self.base.evaluate_grid(n1, n2, offset)
        m = self.matrix
        num = algebra.hamilton(m[0, 0], f) + m[0, 1]
        den = algebra.hamilton(m[1, 0], f) + m[1, 1]
        if np.min(algebra.qnorm(den)) < 1e-10:
            raise SurfaceError("Moebius image passes through infinity on the grid")
        den_inv = algebra.qinv(den)
        g = algebra.hamilton(num, den_inv)

        def push(df: np.ndarray) -> np.ndarray:
            top = algebra.hamilton(m[0, 0], df) - algebra.hamilton(g, algebra.hamilton(m[1, 0], df))
            return algebra.hamilton(top, den_inv)

        return g, push(fx), push(fy)


def moebius_image(spec: SurfaceSpec, matrix: np.ndarray) -> MoebiusImageSurface:
    """Wrap a surface with a constant Moebius transformation."""
    return MoebiusImageSurface(spec, matrix)


def builtin_surface(kind: str | SurfaceKind, params: dict[str, Any] | None = None) -> SurfaceSpec:
    """Build one of the analytic example surfaces by name."""
    params = dict(params or {})
    try:
        kind = SurfaceKind(kind)
    except ValueError as exc:
        raise SurfaceError(f"Unknown surface kind '{kind}'") from exc

    if kind == SurfaceKind.CLIFFORD:
        return CliffordSurface()
    if kind == SurfaceKind.HOMOGENEOUS:
        return HomogeneousSurface(float(params.get("r", 0.6)))
    if kind == SurfaceKind.HSL:
        return HslSurface(float(params.get("a", 1.0)), float(params.get("b", 1.0)))
    if kind == SurfaceKind.HOPF:
        from .hopf import HopfSurface, latitude_curve

        if "curve" in params:
            return HopfSurface(np.asarray(params["curve"], dtype=float))
        curve = latitude_curve(
            height=float(params.get("height", 0.0)),
            wobble=float(params.get("wobble", 0.0)),
            frequency=int(params.get("frequency", 2)),
            samples=int(params.get("samples", 256)),
        )
        return HopfSurface(curve)
    if kind == SurfaceKind.CONFORMAL_MASLOV:
        raise SurfaceError(
            "Conformal Maslov tori are not generated; only the linear-angle hsl family is available",
            {"kind": kind.value},
        )
    raise SurfaceError(f"Surface kind '{kind.value}' has no builtin generator")
