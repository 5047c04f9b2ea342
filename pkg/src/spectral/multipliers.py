"""Multipliers of holonomy eigenlines."""

from __future__ import annotations

from typing import Optional

import numpy as np

from src.common.config import ToleranceConfig, TransportConfig
from src.common.exceptions import SpectralError
from src.common.logging import get_logger
from src.family import MuForm
from src.holonomy import generator_holonomy, sort_spectrum

logger = get_logger(__name__)


def eigenvector(H: np.ndarray, value: complex) -> np.ndarray:
    """Unit vector spanning ker(H - value) numerically (last right singular vector)."""
    d = H.shape[-1]
    _, _, vh = np.linalg.svd(H - value * np.eye(d))
    v = np.conj(vh[-1])
    return v / np.linalg.norm(v)


def rayleigh(H: np.ndarray, v: np.ndarray) -> complex:
    return complex(np.vdot(v, H @ v) / np.vdot(v, v))


def common_multipliers(
    H: np.ndarray,
    h1: np.ndarray,
    h2: np.ndarray,
    eigenvalues: np.ndarray,
    tol: float = 1e-6,
) -> np.ndarray:
    """(h(gamma1), h(gamma2)) on the eigenline of H for each listed eigenvalue.

    Raises:
        SpectralError: If the eigenline of H is not invariant under h1 or h2.
    """
    out = np.zeros((len(eigenvalues), 2), dtype=complex)
    scale = max(1.0, float(np.linalg.norm(h1, 2)), float(np.linalg.norm(h2, 2)))
    for k, value in enumerate(eigenvalues):
        v = eigenvector(H, value)
        for slot, G in enumerate((h1, h2)):
            h = rayleigh(G, v)
            residual = float(np.linalg.norm(G @ v - h * v))
            if residual > np.sqrt(tol) * scale:
                raise SpectralError(
                    "Eigenline is not invariant under both generators",
                    {"mu_eigenvalue": str(value), "generator": slot + 1, "residual": residual},
                )
            out[k, slot] = h
    return out


def eigenline(
    mf: MuForm,
    mu: complex,
    index: int = 0,
    base_point: tuple[int, int] = (0, 0),
    tolerances: Optional[ToleranceConfig] = None,
    transport_settings: Optional[TransportConfig] = None,
) -> tuple[np.ndarray, complex, complex]:
    """Common eigenvector of H(gamma1), H(gamma2) at mu and its multipliers.

    The eigenvalues of H(gamma1) different from 1 are sorted by modulus and
    argument; `index` picks one of them. If H(gamma1) has no simple nontrivial
    eigenvalue the roles of the generators are exchanged.

    Raises:
        SpectralError: If no simple eigenvalue is available or the eigenline is not common.
    """
    tolerances = tolerances or ToleranceConfig()
    transport_settings = transport_settings or TransportConfig()
    mu = complex(mu)
    if mu == 1:
        # trivial holonomy; the line through 0 in the point chart
        return np.eye(mf.dim, dtype=complex)[mf.dim // 2], 1.0 + 0.0j, 1.0 + 0.0j
    h1, h2 = (
        generator_holonomy(
            mf,
            mu,
            name,
            base_point,
            steps=transport_settings.steps,
            tol=tolerances.ode,
            max_refinements=transport_settings.max_refinements,
        ).H
        for name in ("g1", "g2")
    )
    for primary in (h1, h2):
        values = _simple_nontrivial(primary, tolerances.eig)
        if len(values) > index:
            value = values[index]
            v = eigenvector(primary, value)
            (m1, m2), = common_multipliers(primary, h1, h2, np.array([value]), tolerances.eig)
            logger.debug("eigenline_found", mu=str(mu), index=index, h1=str(m1), h2=str(m2))
            return v, m1, m2
    raise SpectralError("No simple nontrivial eigenvalue at mu", {"mu": str(mu), "index": index})


def _simple_nontrivial(H: np.ndarray, tol: float) -> np.ndarray:
    values = sort_spectrum(np.linalg.eigvals(H))
    scale = max(1.0, float(np.max(np.abs(values))))
    keep = []
    for k, v in enumerate(values):
        others = np.delete(values, k)
        if abs(v - 1.0) > tol and np.min(np.abs(others - v)) > np.sqrt(tol) * scale:
            keep.append(v)
    return np.array(keep, dtype=complex)


def eigenline_multiplier(
    mf: MuForm,
    mu: complex,
    index: int = 0,
    base_point: tuple[int, int] = (0, 0),
    tolerances: Optional[ToleranceConfig] = None,
    transport_settings: Optional[TransportConfig] = None,
) -> tuple[complex, complex]:
    """(h1, h2) of the selected eigenline at mu."""
    _, h1, h2 = eigenline(mf, mu, index, base_point, tolerances, transport_settings)
    return h1, h2
