"""Harmonic maps from the torus into S^2 in Im H."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from src.common.exceptions import HarmonicError
from src.quatlin import algebra
from src.surface import TorusLattice, plaquette_curl
from src.surface.spectral_ops import lattice_gradient


@dataclass(frozen=True)
class HarmonicMapGrid:
    """A unit imaginary quaternion field with its partials."""

    N: np.ndarray
    Nx: np.ndarray
    Ny: np.ndarray
    lattice: TorusLattice
    residual: float

    def prime_form(self) -> tuple[np.ndarray, np.ndarray]:
        """dN' = (dN - N *dN)/2."""
        return _prime(self.N, self.Nx, self.Ny)

    def double_prime_form(self) -> tuple[np.ndarray, np.ndarray]:
        """dN'' = (dN + N *dN)/2."""
        return 0.5 * (self.Nx + algebra.hamilton(self.N, self.Ny)), 0.5 * (self.Ny - algebra.hamilton(self.N, self.Nx))

    def is_conformal(self, tol: float = 1e-8) -> bool:
        """True if dN' or dN'' vanishes identically."""
        px, py = self.prime_form()
        qx, qy = self.double_prime_form()
        prime = max(np.max(algebra.qnorm(px)), np.max(algebra.qnorm(py)))
        second = max(np.max(algebra.qnorm(qx)), np.max(algebra.qnorm(qy)))
        return bool(min(prime, second) < tol)


def _prime(N: np.ndarray, Nx: np.ndarray, Ny: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # *dN = (Ny, -Nx)
    return 0.5 * (Nx - algebra.hamilton(N, Ny)), 0.5 * (Ny + algebra.hamilton(N, Nx))


def harmonicity_residual(
    N: np.ndarray,
    lattice: TorusLattice,
    method: Literal["plaquette", "spectral"] = "plaquette",
    mask: np.ndarray | None = None,
) -> float:
    """Max norm of d(dN'); zero exactly for harmonic maps.

    ``plaquette`` uses trapezoid circulations (second order), ``spectral``
    differentiates dN' spectrally.
    """
    N = np.asarray(N, dtype=float)
    unit = np.max(np.abs(algebra.qnorm(N) - 1.0))
    if unit > 1e-8:
        raise HarmonicError("Field is not unit length", {"max_defect": float(unit)})
    Nx, Ny = lattice_gradient(N, lattice)
    px, py = _prime(N, Nx, Ny)
    if method == "plaquette":
        curl = plaquette_curl(px, py, lattice)
    elif method == "spectral":
        py_x = lattice_gradient(py, lattice)[0]
        px_y = lattice_gradient(px, lattice)[1]
        curl = py_x - px_y
    else:
        raise HarmonicError(f"Unknown method '{method}'")
    norms = algebra.qnorm(curl)
    if mask is not None:
        norms = norms[mask]
    return float(np.max(norms))


def harmonic_map_grid(N: np.ndarray, lattice: TorusLattice) -> HarmonicMapGrid:
    """Differentiate N spectrally and record its plaquette harmonicity residual."""
    N = np.asarray(N, dtype=float)
    Nx, Ny = lattice_gradient(N, lattice)
    return HarmonicMapGrid(N=N, Nx=Nx, Ny=Ny, lattice=lattice, residual=harmonicity_residual(N, lattice))
