"""Rank-1 fixtures on the Clifford torus."""

import numpy as np
import pytest

from src.harmonic import harmonic_map_grid, rank1_family

# length of the x generator and the exponent of the constant-coefficient gauge
CLIFFORD_LENGTH = np.pi * np.sqrt(2.0)


def clifford_exponent(mu: complex) -> complex:
    """w with w^2 = -1/2 + i (1/mu - mu)/4; the g1 eigenvalues are -exp(-+ L w)."""
    return np.sqrt(-0.5 + 0.25j * (1.0 / mu - mu))


def clifford_eigenvalues(mu: complex) -> np.ndarray:
    w = clifford_exponent(mu)
    return np.array([-np.exp(-CLIFFORD_LENGTH * w), -np.exp(CLIFFORD_LENGTH * w)])


@pytest.fixture(scope="session")
def clifford_normal(clifford_frames):
    """Left normal N = j e^{i sqrt(2)(y - x)} of the Clifford torus."""
    return harmonic_map_grid(clifford_frames.N, clifford_frames.lattice)


@pytest.fixture(scope="session")
def clifford_rank1(clifford_normal):
    return rank1_family(clifford_normal)
