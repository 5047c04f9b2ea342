"""Mapping degree of sampled maps T^2 -> S^2."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.common.exceptions import DegreeResolutionError

MAX_DRIFT = 0.1


@dataclass(frozen=True)
class DegreeResult:
    value: int
    raw: float
    drift: float


def _solid_angle(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Signed area of the spherical triangle (a, b, c)."""
    numerator = np.einsum("...i,...i->...", a, np.cross(b, c))
    denominator = 1.0 + np.einsum("...i,...i->...", a, b) + np.einsum("...i,...i->...", b, c)
    denominator = denominator + np.einsum("...i,...i->...", c, a)
    return 2.0 * np.arctan2(numerator, denominator)


def degree(unit_map: np.ndarray, orientation: int = 1) -> DegreeResult:
    """Degree of a unit-vector field on the periodic grid.

    Accepts (n1, n2, 3) vectors or (n1, n2, 4) imaginary quaternions. Each
    grid cell is split into two spherical triangles whose signed areas sum to
    4 pi times the degree.
    """
    field = np.asarray(unit_map, dtype=float)
    if field.shape[-1] == 4:
        field = field[..., 1:]
    field = field / np.linalg.norm(field, axis=-1, keepdims=True)

    p10 = np.roll(field, -1, axis=0)
    p01 = np.roll(field, -1, axis=1)
    p11 = np.roll(p10, -1, axis=1)
    steps = np.concatenate(
        [np.einsum("...i,...i->...", field, p10).ravel(), np.einsum("...i,...i->...", field, p01).ravel()]
    )
    if np.min(steps) <= 0.0:
        raise DegreeResolutionError(
            "Insufficient resolution: neighbouring values differ by at least pi/2",
            {"max_angle": float(np.arccos(np.clip(np.min(steps), -1.0, 1.0)))},
        )

    total = np.sum(_solid_angle(field, p10, p11) + _solid_angle(field, p11, p01))
    raw = orientation * float(total) / (4.0 * np.pi)
    value = int(np.rint(raw))
    drift = abs(raw - value)
    if drift > MAX_DRIFT:
        raise DegreeResolutionError("Insufficient resolution for the mapping degree", {"raw": raw, "drift": drift})
    return DegreeResult(value=value, raw=raw, drift=drift)
