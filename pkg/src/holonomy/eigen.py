"""Eigenvalues and Jordan data of 4x4 holonomy matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment


@dataclass(frozen=True)
class EigenStructure:
    """Clustered spectrum of H with the Jordan data of the eigenvalue 1."""

    eigenvalues: np.ndarray
    multiplicities: tuple[int, ...]
    unit_algebraic: int
    unit_geometric: int
    rank_h_minus_id: int
    rank_h_minus_id_squared: int

    @property
    def distinct(self) -> int:
        return len(self.multiplicities)

    @property
    def distinct_nontrivial(self) -> int:
        """Number of distinct eigenvalues different from 1."""
        return self.distinct - (1 if self.unit_algebraic else 0)

    @property
    def is_identity(self) -> bool:
        return self.rank_h_minus_id == 0

    def with_multiplicity(self) -> np.ndarray:
        """Eigenvalues repeated by algebraic multiplicity, sorted."""
        return sort_spectrum(np.repeat(self.eigenvalues, self.multiplicities))

    def pairs(self) -> list[tuple[float, float]]:
        return [(float(v.real), float(v.imag)) for v in self.with_multiplicity()]


def sort_spectrum(values: np.ndarray) -> np.ndarray:
    """Deterministic order: by modulus, then argument."""
    values = np.asarray(values, dtype=complex)
    order = np.lexsort((np.round(np.angle(values), 9), np.round(np.abs(values), 9)))
    return values[order]


def characteristic_roots(H: np.ndarray) -> np.ndarray:
    """Roots of det(lambda - H) through the companion matrix of the characteristic polynomial."""
    return np.roots(np.poly(H))


def refine_eigenvalue(H: np.ndarray, value: complex, iterations: int = 3) -> complex:
    """Inverse iteration from a root estimate followed by a Rayleigh quotient."""
    d = H.shape[-1]
    scale = max(1.0, float(np.linalg.norm(H, 2)))
    shifted = H - (value + 1e-10 * scale) * np.eye(d)
    v = np.ones(d, dtype=complex) + 0.1j * np.arange(d)
    try:
        for _ in range(iterations):
            v = np.linalg.solve(shifted, v)
            v /= np.linalg.norm(v)
    except np.linalg.LinAlgError:
        return complex(value)
    refined = complex(np.vdot(v, H @ v) / np.vdot(v, v))
    residual = np.linalg.norm(H @ v - refined * v)
    if not np.isfinite(refined) or residual > 1e-6 * scale:
        return complex(value)
    return refined


def cluster_values(values: np.ndarray, tol: float) -> tuple[np.ndarray, tuple[int, ...]]:
    """Merge values closer than tol * max(1, |value|); returns cluster means and sizes."""
    remaining = list(sort_spectrum(values))
    centers: list[complex] = []
    counts: list[int] = []
    while remaining:
        seed = remaining.pop(0)
        members = [seed]
        for v in list(remaining):
            if abs(v - seed) <= tol * max(1.0, abs(seed)):
                members.append(v)
                remaining.remove(v)
        centers.append(complex(np.mean(members)))
        counts.append(len(members))
    return np.array(centers, dtype=complex), tuple(counts)


def numerical_rank(X: np.ndarray, tol: float, scale: float = 1.0) -> int:
    """Number of singular values above tol * scale."""
    sv = np.linalg.svd(X, compute_uv=False)
    return int(np.sum(sv > tol * scale))


def eigen_structure(H: np.ndarray, tol: float = 1e-6, rank_tol: float = 1e-6) -> EigenStructure:
    """Spectrum of H clustered at relative tolerance tol, with ranks of H - Id and (H - Id)^2."""
    H = np.asarray(H, dtype=complex)
    d = H.shape[-1]
    roots = np.array([refine_eigenvalue(H, r) for r in characteristic_roots(H)])
    values, counts = cluster_values(roots, tol)
    unit = [k for k, v in enumerate(values) if abs(v - 1.0) <= tol]
    unit_algebraic = sum(counts[k] for k in unit)
    if unit:
        values = values.copy()
        values[unit[0]] = 1.0
    scale = max(1.0, float(np.linalg.norm(H, 2)))
    X = H - np.eye(d)
    rank1 = numerical_rank(X, rank_tol, scale)
    rank2 = min(rank1, numerical_rank(X @ X, rank_tol, scale * scale))
    unit_geometric = d - rank1 if unit_algebraic else 0
    return EigenStructure(
        eigenvalues=values,
        multiplicities=counts,
        unit_algebraic=unit_algebraic,
        unit_geometric=min(unit_geometric, unit_algebraic),
        rank_h_minus_id=rank1,
        rank_h_minus_id_squared=rank2,
    )


def spectrum_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Optimal matching distance between two eigenvalue multisets of equal size."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(np.max(cost[rows, cols]))
