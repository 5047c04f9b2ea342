"""Path-ordered parallel transport of an associated family.

Parallel sections satisfy psi(end) = T psi(start) with T' = -Omega(gamma') T,
T(0) = Id, integrated by fixed-step RK4. Omega is sampled at the RK4 nodes
by trigonometric interpolation of the grid field: a 1D resampling when the
segment is a lattice generator through a grid point, a 2D Fourier sum
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from src.common.exceptions import TransportError
from src.common.logging import get_logger
from src.family import MuForm, rk4_step
from src.surface.spectral_ops import fourier_evaluate, resample_axis

logger = get_logger(__name__)

GENERATORS: dict[str, tuple[int, int]] = {
    "g1": (1, 0),
    "g2": (0, 1),
    "g1+g2": (1, 1),
    "g1-g2": (1, -1),
}

Segment = tuple[complex, complex]


@dataclass(frozen=True)
class TransportResult:
    """Transport matrix along a path together with its accuracy."""

    H: np.ndarray
    mu: complex
    generator: str
    steps: int
    error_estimate: float
    refinements: int = 0
    path: tuple[Segment, ...] = field(default=(), repr=False)

    @property
    def det_drift(self) -> float:
        """|det H - 1|."""
        return float(abs(np.linalg.det(self.H) - 1.0))

    @property
    def mu_pair(self) -> tuple[float, float]:
        return (float(self.mu.real), float(self.mu.imag))


def _grid_coordinates(mf: MuForm, z: complex) -> tuple[float, float]:
    """Position of z in grid-index units (grid point (i, j) sits at (i, j))."""
    s, t = mf.lattice.to_fractions(z)
    n1, n2 = mf.shape
    return float(s) * n1 - mf.offset[0], float(t) * n2 - mf.offset[1]


def _is_integer(x: float) -> bool:
    return abs(x - round(x)) < 1e-9


def segment_samples(mf: MuForm, mu: complex, segment: Segment, nodes: int) -> np.ndarray:
    """Omega(mu)(end - start) at `nodes` equispaced points of the segment, endpoints included."""
    start, end = complex(segment[0]), complex(segment[1])
    field_values = mf.along(mu, end - start)
    n1, n2 = mf.shape
    a1, a2 = _grid_coordinates(mf, start)
    b1, b2 = _grid_coordinates(mf, end)
    d1, d2 = b1 - a1, b2 - a2
    m = nodes - 1
    aligned = _is_integer(a1) and _is_integer(a2)
    if aligned and m >= n1 and abs(d1 - n1) < 1e-9 and abs(d2) < 1e-9:
        line = np.roll(field_values[:, int(round(a2)) % n2], -int(round(a1)), axis=0)
        samples = resample_axis(line, m, axis=0)
        return np.concatenate([samples, samples[:1]], axis=0)
    if aligned and m >= n2 and abs(d2 - n2) < 1e-9 and abs(d1) < 1e-9:
        line = np.roll(field_values[int(round(a1)) % n1], -int(round(a2)), axis=0)
        samples = resample_axis(line, m, axis=0)
        return np.concatenate([samples, samples[:1]], axis=0)
    t = np.linspace(0.0, 1.0, nodes)
    return fourier_evaluate(field_values, (a1 + t * d1) / n1, (a2 + t * d2) / n2)


def _integrate(samples: np.ndarray, stride: int) -> np.ndarray:
    """RK4 through samples[::stride]; consecutive triples are (start, mid, end) of one step."""
    nodes = samples[::stride]
    steps = (len(nodes) - 1) // 2
    h = 1.0 / steps
    T = np.eye(samples.shape[-1], dtype=complex)
    for k in range(steps):
        T = rk4_step(T, h * nodes[2 * k], h * nodes[2 * k + 1], h * nodes[2 * k + 2])
    return T


def _transport_once(mf: MuForm, mu: complex, path: Sequence[Segment], steps: int) -> tuple[np.ndarray, np.ndarray]:
    """(T with `steps` RK4 steps per segment, T with steps/2) for the whole path."""
    fine = np.eye(mf.dim, dtype=complex)
    coarse = np.eye(mf.dim, dtype=complex)
    for segment in path:
        samples = segment_samples(mf, mu, segment, 2 * steps + 1)
        fine = _integrate(samples, 1) @ fine
        coarse = _integrate(samples, 2) @ coarse
    return fine, coarse


def transport(
    mf: MuForm,
    mu: complex,
    path: Sequence[Segment],
    steps: int = 512,
    tol: float = 1e-8,
    max_refinements: int = 3,
    generator: str = "path",
) -> TransportResult:
    """Transport along straight segments, doubling the step count until the Richardson estimate meets tol.

    Args:
        mf: Associated family.
        mu: Spectral parameter.
        path: Consecutive segments (start, end) in the universal cover C.
        steps: Initial RK4 steps per segment; must be even.
        tol: Bound on |T_n - T_{n/2}| / 15 relative to max(1, |T_n|).
        max_refinements: Number of step doublings allowed.
        generator: Label stored in the result.

    Raises:
        TransportError: If the estimate stays above tol.
    """
    mu = complex(mu)
    if not path:
        raise TransportError("Empty transport path")
    steps = max(2, int(steps) + int(steps) % 2)
    for refinement in range(max_refinements + 1):
        fine, coarse = _transport_once(mf, mu, path, steps)
        scale = max(1.0, float(np.linalg.norm(fine)))
        error = float(np.linalg.norm(fine - coarse)) / 15.0 / scale
        if error <= tol:
            logger.debug("transport_converged", mu=str(mu), generator=generator, steps=steps, error=error)
            return TransportResult(
                H=fine,
                mu=mu,
                generator=generator,
                steps=steps,
                error_estimate=error,
                refinements=refinement,
                path=tuple(path),
            )
        if refinement < max_refinements:
            steps *= 2
    raise TransportError(
        "Transport did not reach the requested accuracy",
        {"mu": str(mu), "generator": generator, "steps": steps, "error": error, "tol": tol},
    )


def base_coordinate(mf: MuForm, base_point: tuple[int, int]) -> complex:
    """Complex coordinate of a grid point."""
    i, j = mf.base_index(base_point)
    n1, n2 = mf.shape
    s = (i + mf.offset[0]) / n1
    t = (j + mf.offset[1]) / n2
    return s * mf.lattice.tau1 + t * mf.lattice.tau2


def generator_loop(mf: MuForm, name: str, base_point: tuple[int, int] = (0, 0)) -> list[Segment]:
    """Closed straight loop p -> p + gamma for a named lattice generator."""
    try:
        a, b = GENERATORS[name]
    except KeyError as exc:
        raise TransportError(f"Unknown generator '{name}'", {"known": list(GENERATORS)}) from exc
    start = base_coordinate(mf, base_point)
    return [(start, start + a * mf.lattice.tau1 + b * mf.lattice.tau2)]


def generator_holonomy(
    mf: MuForm,
    mu: complex,
    name: str = "g1",
    base_point: tuple[int, int] = (0, 0),
    steps: int = 512,
    tol: float = 1e-8,
    max_refinements: int = 3,
) -> TransportResult:
    """Holonomy H(gamma) := T(1) along a named generator loop at the base point."""
    return transport(
        mf,
        mu,
        generator_loop(mf, name, base_point),
        steps=steps,
        tol=tol,
        max_refinements=max_refinements,
        generator=name,
    )


def holonomy_pair(
    mf: MuForm,
    mu: complex,
    base_point: tuple[int, int] = (0, 0),
    steps: int = 512,
    tol: float = 1e-8,
    max_refinements: int = 3,
) -> tuple[TransportResult, TransportResult]:
    """Holonomies along t -> p + t tau1 and t -> p + t tau2."""
    return (
        generator_holonomy(mf, mu, "g1", base_point, steps, tol, max_refinements),
        generator_holonomy(mf, mu, "g2", base_point, steps, tol, max_refinements),
    )


def commutator_norm(h1: np.ndarray, h2: np.ndarray) -> float:
    """|[H1, H2]| relative to |H1| |H2|."""
    scale = max(1.0, float(np.linalg.norm(h1) * np.linalg.norm(h2)))
    return float(np.linalg.norm(h1 @ h2 - h2 @ h1)) / scale
