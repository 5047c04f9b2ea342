"""Constant families with closed-form spectral data."""

import numpy as np
import pytest

from src.family import constant_family
from src.surface import TorusLattice


def swap_family(a: float = 0.0, c: float = 0.0):
    """2x2 block Omega_x = [[u, mu - 1], [1/mu - 1, -u]], u = (mu - 1) a + (1/mu - 1) c, padded by zeros.

    The g1 holonomy is exp(-Omega_x) on the block and the identity on the rest,
    so lambda = 1 has multiplicity two and the block eigenvalues are exp(-+w)
    with w^2 = (mu - 1)^2 ((a - c/mu)^2 - 1/mu).
    """
    P = np.zeros((4, 4), dtype=complex)
    M = np.zeros((4, 4), dtype=complex)
    P[:2, :2] = [[a, 1.0], [0.0, -a]]
    M[:2, :2] = [[c, 0.0], [1.0, -c]]
    return constant_family(P, M, TorusLattice.rectangular(1.0, 1.0), 8, 8, kind="test:swap")


def block_exponent(mu: complex, a: float = 0.0, c: float = 0.0) -> complex:
    return np.sqrt((mu - 1) ** 2 * ((a - c / mu) ** 2 - 1 / mu))


@pytest.fixture(scope="session")
def swap():
    return swap_family()


@pytest.fixture(scope="session")
def branched():
    """Branch points at mu = 1 +- sqrt(3)/2."""
    return swap_family(a=1.0, c=0.5)
