"""Hopf tori: preimages of closed curves on S^2 under q -> conj(q) i q.

The input curve is reparametrized by arc length numerically, lifted
horizontally with RK4, and swept along the fibers. The lift closes up to a
fiber rotation e^{i Theta}, which fixes the lattice tau1 = L/2 - i Theta,
tau2 = 2 pi i.
"""

from __future__ import annotations

import numpy as np

from src.common.exceptions import SurfaceError
from src.common.logging import get_logger
from src.common.types import SurfaceKind
from src.quatlin import algebra

from .generators import SurfaceSpec, Triple
from .lattice import TorusLattice

logger = get_logger(__name__)

_NEWTON_ITERATIONS = 30


def latitude_curve(height: float = 0.0, wobble: float = 0.0, frequency: int = 2, samples: int = 256) -> np.ndarray:
    """Samples of a latitude circle z = height + wobble sin(k theta) on S^2."""
    if abs(height) + abs(wobble) >= 1.0:
        raise SurfaceError("Latitude curve must stay away from the poles", {"height": height, "wobble": wobble})
    theta = 2 * np.pi * np.arange(samples) / samples
    z = height + wobble * np.sin(frequency * theta)
    rho = np.sqrt(1.0 - z * z)
    return np.stack([rho * np.cos(theta), rho * np.sin(theta), z], axis=-1)


class _PeriodicCurve:
    """Trigonometric interpolant of a closed curve sampled uniformly in theta."""

    def __init__(self, samples: np.ndarray):
        self.m = samples.shape[0]
        self.coeffs = np.fft.fft(samples, axis=0) / self.m
        self.k = np.fft.fftfreq(self.m, d=1.0 / self.m)

    def __call__(self, theta: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        phase = np.exp(1j * np.outer(theta, self.k))
        dphase = 1j * self.k * phase
        if self.m % 2 == 0:
            nyq = self.m // 2
            phase[:, nyq] = np.cos(nyq * theta)
            dphase[:, nyq] = -nyq * np.sin(nyq * theta)
        value = (phase @ self.coeffs).real
        derivative = (dphase @ self.coeffs).real
        norm = np.linalg.norm(value, axis=-1, keepdims=True)
        unit = value / norm
        tangent = (derivative - unit * np.sum(unit * derivative, axis=-1, keepdims=True)) / norm
        return unit, tangent


class HopfSurface(SurfaceSpec):
    """Hopf torus over a closed regular curve on S^2 given by samples."""

    kind = SurfaceKind.HOPF

    def __init__(self, curve: np.ndarray, substeps: int = 8, closure_tol: float = 1e-6):
        curve = np.asarray(curve, dtype=float)
        if curve.ndim != 2 or curve.shape[1] != 3 or curve.shape[0] < 8:
            raise SurfaceError("Hopf curve must be at least 8 samples of points in R^3", {"shape": curve.shape})
        curve = curve / np.linalg.norm(curve, axis=-1, keepdims=True)
        if np.allclose(curve[0], curve[-1]):
            curve = curve[:-1]
        steps = np.linalg.norm(np.diff(curve, axis=0, append=curve[:1]), axis=-1)
        if steps.min() <= 0.0 or steps[-1] > 10.0 * np.median(steps):
            raise SurfaceError(
                "Hopf curve not closed or not regular",
                {"closing_step": float(steps[-1]), "median_step": float(np.median(steps))},
            )
        self.curve = _PeriodicCurve(curve)
        self.substeps = substeps
        self._fit_arc_length(4 * curve.shape[0])
        fine = max(512, 4 * curve.shape[0])
        lift = self._lift(fine, 0.0)
        closure = algebra.hamilton(lift[-1], algebra.qconj(lift[0]))
        defect = float(np.hypot(closure[2], closure[3]))
        if defect > closure_tol:
            raise SurfaceError("Horizontal lift does not close within a fiber", {"defect": defect})
        self.holonomy_angle = float(np.arctan2(closure[1], closure[0]))
        lattice = TorusLattice(complex(self.length / 2, -self.holonomy_angle), 2j * np.pi)
        super().__init__(lattice, {"samples": int(curve.shape[0]), "length": self.length})
        logger.debug("hopf_lattice", length=self.length, holonomy_angle=self.holonomy_angle)

    def _fit_arc_length(self, quadrature_points: int) -> None:
        theta = 2 * np.pi * np.arange(quadrature_points) / quadrature_points
        _, tangent = self.curve(theta)
        speed = np.linalg.norm(tangent, axis=-1)
        self._speed_coeffs = np.fft.fft(speed) / quadrature_points
        self._speed_k = np.fft.fftfreq(quadrature_points, d=1.0 / quadrature_points)
        if quadrature_points % 2 == 0:
            self._speed_coeffs[quadrature_points // 2] = 0.0
        self.length = float(2 * np.pi * self._speed_coeffs[0].real)

    def _arc_length(self, theta: np.ndarray) -> np.ndarray:
        k = self._speed_k[1:]
        out = self._speed_coeffs[0].real * theta
        for chunk in np.array_split(np.arange(theta.size), max(1, theta.size // 512)):
            terms = (np.exp(1j * np.outer(theta[chunk], k)) - 1.0) / (1j * k)
            out[chunk] += (terms @ self._speed_coeffs[1:]).real
        return out

    def _theta_of_sigma(self, sigma: np.ndarray) -> np.ndarray:
        turns, rest = np.divmod(sigma, self.length)
        theta = 2 * np.pi * rest / self.length
        for _ in range(_NEWTON_ITERATIONS):
            _, tangent = self.curve(theta)
            step = (self._arc_length(theta) - rest) / np.linalg.norm(tangent, axis=-1)
            theta = theta - step
            if np.max(np.abs(step)) < 1e-14:
                break
        return theta + 2 * np.pi * turns

    def arc_samples(self, sigma: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Unit curve points and unit tangents at arc lengths sigma."""
        gamma, tangent = self.curve(self._theta_of_sigma(np.asarray(sigma, dtype=float)))
        return gamma, tangent / np.linalg.norm(tangent, axis=-1, keepdims=True)

    @staticmethod
    def _initial_point(g: np.ndarray) -> np.ndarray:
        """c with conj(c) i c = g."""
        g = algebra.from_imag(g)
        r = algebra.ONE - algebra.hamilton(g, algebra.I)
        norm = algebra.qnorm(r)
        r = algebra.J if norm < 1e-8 else r / norm
        return algebra.qconj(r)

    def _generator(self, steps: int, sigma0: float) -> tuple[np.ndarray, float]:
        h = self.length / steps
        gamma, tangent = self.arc_samples(sigma0 + 0.5 * h * np.arange(2 * steps + 1))
        xi = -0.5 * algebra.hamilton(algebra.from_imag(gamma), algebra.from_imag(tangent))
        return np.concatenate([xi, gamma], axis=-1), h

    def _lift(self, steps: int, sigma0: float, fields: tuple[np.ndarray, float] | None = None) -> np.ndarray:
        data, h = fields or self._generator(steps, sigma0)
        xi = data[:, :4]
        c = np.empty((steps + 1, 4))
        c[0] = self._initial_point(data[0, 4:])
        for n in range(steps):
            k1 = algebra.hamilton(c[n], xi[2 * n])
            k2 = algebra.hamilton(c[n] + 0.5 * h * k1, xi[2 * n + 1])
            k3 = algebra.hamilton(c[n] + 0.5 * h * k2, xi[2 * n + 1])
            k4 = algebra.hamilton(c[n] + h * k3, xi[2 * n + 2])
            nxt = c[n] + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
            c[n + 1] = nxt / algebra.qnorm(nxt)
        return c

    def evaluate_grid(self, n1: int, n2: int, offset: tuple[float, float] = (0.0, 0.0)) -> Triple:
        steps = n1 * self.substeps
        sigma0 = offset[0] * self.length / n1
        fields = self._generator(steps, sigma0)
        lift = self._lift(steps, sigma0, fields)[:-1:self.substeps]
        xi = fields[0][: 2 * steps : 2 * self.substeps, :4]

        s = (np.arange(n1) + offset[0]) / n1
        t = (np.arange(n2) + offset[1]) / n2
        angle = -np.outer(s, np.ones(n2)) * self.holonomy_angle + 2 * np.pi * t[None, :]
        fiber = algebra.exp_i(angle)
        c = np.broadcast_to(lift[:, None, :], (n1, n2, 4))
        f = algebra.hamilton(fiber, c)
        fx = 2.0 * algebra.hamilton(fiber, algebra.hamilton(lift, xi)[:, None, :])
        fy = algebra.hamilton(algebra.I, f)
        return f, fx, fy
