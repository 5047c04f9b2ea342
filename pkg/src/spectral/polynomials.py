"""Characteristic polynomials of holonomies and removal of the trivial eigenvalue."""

from __future__ import annotations

import numpy as np

from src.common.exceptions import NoSpectralCurveError, SpectralError
from src.common.types import CaseKind, CaseLabel

TRIVIAL_ORDER = {CaseKind.I: 0, CaseKind.II: 2}


def characteristic_polynomial(H: np.ndarray) -> np.ndarray:
    """Coefficients of det(lambda - H), highest degree first."""
    return np.poly(np.asarray(H, dtype=complex)).astype(complex)


def trivial_order(case: CaseLabel | CaseKind | str) -> int:
    """Number k of factors (lambda - 1) removed for the given case."""
    kind = case.label if isinstance(case, CaseLabel) else CaseKind(case)
    if kind in (CaseKind.IIIA, CaseKind.IIIB):
        raise NoSpectralCurveError("Unipotent holonomy has no nontrivial spectral curve", {"case": kind.value})
    if kind not in TRIVIAL_ORDER:
        raise SpectralError("Spectral curve needs a determined case", {"case": kind.value})
    return TRIVIAL_ORDER[kind]


def strip_trivial(
    quartic: np.ndarray,
    case: CaseLabel | CaseKind | str,
    tol: float = 1e-6,
    order: int | None = None,
) -> np.ndarray:
    """Deflate (lambda - 1)^k from the characteristic polynomial: k = 0 in Case I, 2 in Case II.

    `order` overrides k, e.g. 0 for the 2x2 harmonic map family.

    Raises:
        SpectralError: If lambda = 1 is not a root of the required multiplicity.
    """
    poly = np.asarray(quartic, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(poly))))
    k = trivial_order(case) if order is None else order
    for removed in range(k):
        poly, remainder = np.polydiv(poly, np.array([1.0, -1.0], dtype=complex))
        residual = float(np.max(np.abs(remainder))) if remainder.size else 0.0
        # multiple roots are only resolved to about sqrt(eps) relative
        bound = tol * scale if removed == 0 else np.sqrt(tol) * scale
        if residual > bound:
            raise SpectralError(
                "lambda = 1 is not a root of the required multiplicity",
                {"removed": removed, "residual": residual, "tol": tol},
            )
    return poly


def discriminant(coeffs: np.ndarray) -> complex:
    """Discriminant of the monic normalization: product of squared root differences."""
    coeffs = np.asarray(coeffs, dtype=complex)
    coeffs = coeffs / coeffs[0]
    if len(coeffs) == 3:
        return complex(coeffs[1] ** 2 - 4.0 * coeffs[2])
    roots = np.roots(coeffs)
    value = 1.0 + 0.0j
    for a in range(len(roots)):
        for b in range(a + 1, len(roots)):
            value *= (roots[a] - roots[b]) ** 2
    return complex(value)


def reconstruction_residual(coeffs: np.ndarray, roots: np.ndarray) -> float:
    """max |poly(roots) - coeffs| relative to the coefficient size."""
    coeffs = np.asarray(coeffs, dtype=complex)
    rebuilt = coeffs[0] * np.poly(roots)
    return float(np.max(np.abs(rebuilt - coeffs)) / max(1.0, float(np.max(np.abs(coeffs)))))
