"""Tests for characteristic polynomials, trivial-factor removal and discriminants."""

import numpy as np
import pytest

from src.common.exceptions import NoSpectralCurveError, SpectralError
from src.common.types import CaseKind
from src.spectral import (
    characteristic_polynomial,
    discriminant,
    reconstruction_residual,
    strip_trivial,
    trivial_order,
)


class TestStripTrivial:
    """Tests for strip_trivial."""

    def test_case_two_removes_double_unit(self):
        """(l-1)^2 (l-2)(l-3) reduces to (l-2)(l-3)."""
        quartic = np.poly([1.0, 1.0, 2.0, 3.0])
        reduced = strip_trivial(quartic, CaseKind.II)
        np.testing.assert_allclose(reduced, np.poly([2.0, 3.0]), atol=1e-10)

    def test_case_one_keeps_quartic(self):
        """Case I keeps all four roots."""
        quartic = np.poly([0.5, 2.0, 1j, -1j])
        np.testing.assert_allclose(strip_trivial(quartic, "I"), quartic)

    def test_case_two_without_unit_root(self):
        """A quartic without lambda = 1 is rejected in Case II."""
        with pytest.raises(SpectralError):
            strip_trivial(np.poly([1.0, 2.0, 3.0, 4.0]), CaseKind.II)

    def test_case_three_has_no_curve(self):
        """Unipotent cases have no spectral curve."""
        with pytest.raises(NoSpectralCurveError):
            strip_trivial(np.poly([1.0] * 4), CaseKind.IIIA)
        with pytest.raises(NoSpectralCurveError):
            trivial_order(CaseKind.IIIB)

    def test_undetermined(self):
        """Undetermined labels are refused."""
        with pytest.raises(SpectralError):
            trivial_order(CaseKind.UNDETERMINED)

    def test_perturbed_double_root(self):
        """A double root split at 1e-9 is still removed."""
        quartic = np.poly([1.0 + 1e-9, 1.0 - 1e-9, 0.5, 2.0])
        reduced = strip_trivial(quartic, CaseKind.II)
        np.testing.assert_allclose(np.sort(np.roots(reduced).real), [0.5, 2.0], atol=1e-6)


class TestDiscriminant:
    """Tests for discriminant."""

    def test_quadratic(self):
        """b^2 - 4c of the monic normalization."""
        assert discriminant(np.array([2.0, 6.0, 4.0])) == pytest.approx(1.0)

    def test_quartic(self):
        """Product of squared root differences."""
        roots = [1.0, 2.0, 3.0, 4.0]
        expected = np.prod([(a - b) ** 2 for i, a in enumerate(roots) for b in roots[i + 1 :]])
        assert discriminant(np.poly(roots)) == pytest.approx(expected)

    def test_double_root(self):
        """A repeated root gives zero."""
        assert abs(discriminant(np.poly([2.0, 2.0, 1j, 3.0]))) < 1e-6


class TestCharacteristicPolynomial:
    """Tests for characteristic_polynomial."""

    def test_roots_reconstruct(self, rng):
        """The eigenvalues rebuild the coefficients."""
        H = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        coeffs = characteristic_polynomial(H)
        assert reconstruction_residual(coeffs, np.linalg.eigvals(H)) < 1e-10
        assert coeffs[-1] == pytest.approx(np.linalg.det(H))
