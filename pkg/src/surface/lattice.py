"""Period lattices of tori C/Gamma and grid coordinates on the fundamental domain."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.common.exceptions import SurfaceError


@dataclass(frozen=True)
class TorusLattice:
    """Lattice generated by tau1, tau2; points are z = s*tau1 + t*tau2 with s, t in [0, 1)."""

    tau1: complex
    tau2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "tau1", complex(self.tau1))
        object.__setattr__(self, "tau2", complex(self.tau2))
        if abs(self.cross) < 1e-12 * max(1.0, abs(self.tau1) * abs(self.tau2)):
            raise SurfaceError(
                "Degenerate lattice: generators are real-linearly dependent",
                {"tau1": self.tau1, "tau2": self.tau2},
            )

    @property
    def cross(self) -> float:
        """Im(conj(tau1) * tau2), the signed area of the fundamental domain."""
        return float((np.conj(self.tau1) * self.tau2).imag)

    @property
    def area(self) -> float:
        return abs(self.cross)

    @property
    def orientation(self) -> int:
        """+1 if (tau1, tau2) is positively oriented in the (x, y) plane."""
        return 1 if self.cross > 0 else -1

    @property
    def basis(self) -> np.ndarray:
        """Rows (Re tau, Im tau): maps (d/dx, d/dy) to (d/ds, d/dt)."""
        return np.array([[self.tau1.real, self.tau1.imag], [self.tau2.real, self.tau2.imag]])

    def generator(self, index: int) -> complex:
        """tau1 for index 0, tau2 for index 1."""
        if index not in (0, 1):
            raise SurfaceError("Lattice generator index must be 0 or 1", {"index": index})
        return self.tau1 if index == 0 else self.tau2

    def fractions(self, n1: int, n2: int, offset: tuple[float, float] = (0.0, 0.0)) -> tuple[np.ndarray, np.ndarray]:
        """Lattice coordinates (s, t) of an n1 x n2 grid, shifted by offset grid steps."""
        s = (np.arange(n1) + offset[0]) / n1
        t = (np.arange(n2) + offset[1]) / n2
        return np.meshgrid(s, t, indexing="ij")

    def points(self, n1: int, n2: int, offset: tuple[float, float] = (0.0, 0.0)) -> np.ndarray:
        """Complex coordinates z = x + iy of the grid."""
        s, t = self.fractions(n1, n2, offset)
        return s * self.tau1 + t * self.tau2

    def to_fractions(self, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Lattice coordinates (s, t) of points z = s*tau1 + t*tau2."""
        z = np.asarray(z, dtype=complex)
        xy = np.stack([z.real, z.imag], axis=-1) @ np.linalg.inv(self.basis)
        return xy[..., 0], xy[..., 1]

    def cell_area(self, n1: int, n2: int) -> float:
        return self.area / (n1 * n2)

    def as_dict(self) -> dict[str, tuple[float, float]]:
        return {
            "tau1": (float(self.tau1.real), float(self.tau1.imag)),
            "tau2": (float(self.tau2.real), float(self.tau2.imag)),
        }

    @classmethod
    def rectangular(cls, width: float, height: float) -> TorusLattice:
        return cls(complex(width, 0.0), complex(0.0, height))
