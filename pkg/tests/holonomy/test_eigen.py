"""Tests for eigenvalue and Jordan analysis of holonomy matrices."""

import numpy as np
import pytest

from src.holonomy import cluster_values, eigen_structure, sort_spectrum, spectrum_distance


def conjugated(D: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    X = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    return X @ D @ np.linalg.inv(X)


class TestEigenStructure:
    """Tests for eigen_structure."""

    def test_identity(self):
        """Id has eigenvalue 1 of multiplicity 4 and vanishing ranks."""
        es = eigen_structure(np.eye(4))
        assert es.multiplicities == (4,)
        assert es.unit_algebraic == 4
        assert es.unit_geometric == 4
        assert es.rank_h_minus_id == 0
        assert es.rank_h_minus_id_squared == 0
        assert es.is_identity

    def test_jordan_block_at_one(self, rng):
        """A 2x2 Jordan block at 1 plus {2, 1/2}."""
        D = np.diag([1.0, 1.0, 2.0, 0.5]).astype(complex)
        D[0, 1] = 1.0
        es = eigen_structure(conjugated(D, rng))
        assert es.unit_algebraic == 2
        assert es.unit_geometric == 1
        assert es.rank_h_minus_id == 3
        assert es.distinct_nontrivial == 2

    def test_simple_spectrum(self, rng):
        """diag(2, 1/2, e^{i theta}, e^{-i theta}) has four simple eigenvalues."""
        theta = 0.7
        values = np.array([2.0, 0.5, np.exp(1j * theta), np.exp(-1j * theta)])
        es = eigen_structure(conjugated(np.diag(values), rng))
        assert es.distinct == 4
        assert es.unit_algebraic == 0
        assert spectrum_distance(es.with_multiplicity(), values) < 1e-10

    def test_two_jordan_blocks(self):
        """Two 2x2 Jordan blocks at 1: rank(H - Id) = 2 and (H - Id)^2 = 0."""
        H = np.eye(4, dtype=complex)
        H[0, 2] = H[1, 3] = 0.8
        es = eigen_structure(H)
        assert es.rank_h_minus_id == 2
        assert es.rank_h_minus_id_squared == 0
        assert es.unit_geometric == 2

    def test_semisimple_double_unit(self, rng):
        """diag(1, 1, 3, 1/3) has a unit eigenspace of dimension 2."""
        es = eigen_structure(conjugated(np.diag([1.0, 1.0, 3.0, 1 / 3]).astype(complex), rng))
        assert es.unit_algebraic == 2
        assert es.unit_geometric == 2
        assert es.rank_h_minus_id == 2


class TestHelpers:
    """Tests for clustering and spectrum helpers."""

    def test_cluster_values(self):
        """Values within the tolerance merge."""
        centers, counts = cluster_values(np.array([1.0, 1.0 + 1e-9, 2.0, 3.0]), 1e-6)
        assert counts == (2, 1, 1)
        assert centers[0] == pytest.approx(1.0)

    def test_sort_is_deterministic(self):
        """Sorting does not depend on input order."""
        values = np.array([2.0, 0.5j, -1.0, 0.5])
        np.testing.assert_array_equal(sort_spectrum(values), sort_spectrum(values[::-1]))

    def test_spectrum_distance(self):
        """Matching ignores order."""
        assert spectrum_distance([1, 2j, 3], [3, 1, 2j]) == 0.0
