"""Tests for periodic interpolation and differentiation."""

import numpy as np

from src.surface import TorusLattice, plaquette_curl, star
from src.surface.spectral_ops import (
    fourier_evaluate,
    lattice_gradient,
    periodic_derivative,
    resample_axis,
    resample_grid,
)


def trig(s, t):
    return np.cos(2 * np.pi * s) + 0.5 * np.sin(2 * np.pi * (2 * s - t)) + 0.25 * np.cos(6 * np.pi * t)


class TestDerivatives:
    """Tests for spectral derivatives."""

    def test_sine_derivative(self):
        """d/ds sin(2 pi s) is 2 pi cos(2 pi s)."""
        s = np.arange(16) / 16
        np.testing.assert_allclose(
            periodic_derivative(np.sin(2 * np.pi * s), axis=0), 2 * np.pi * np.cos(2 * np.pi * s), atol=1e-12
        )

    def test_real_input_stays_real(self):
        """Real data gives a real derivative."""
        assert np.isrealobj(periodic_derivative(np.random.default_rng(0).normal(size=8), axis=0))

    def test_lattice_gradient_oblique(self):
        """Gradient on an oblique lattice matches the chain rule."""
        lattice = TorusLattice(2.0 + 0.0j, 0.5 + 1.5j)
        z = lattice.points(16, 16)
        kx, ky = np.linalg.solve(lattice.basis, [2 * np.pi, 0.0])
        values = np.exp(1j * (kx * z.real + ky * z.imag))
        dx, dy = lattice_gradient(values, lattice)
        np.testing.assert_allclose(dx, 1j * kx * values, atol=1e-10)
        np.testing.assert_allclose(dy, 1j * ky * values, atol=1e-10)


class TestResampling:
    """Tests for trigonometric resampling and evaluation."""

    def test_upsample_exact(self):
        """A band-limited field upsamples exactly."""
        s, t = np.meshgrid(np.arange(16) / 16, np.arange(16) / 16, indexing="ij")
        fine_s, fine_t = np.meshgrid(np.arange(32) / 32, np.arange(32) / 32, indexing="ij")
        np.testing.assert_allclose(resample_grid(trig(s, t), 32, 32), trig(fine_s, fine_t), atol=1e-12)

    def test_downsample_exact(self):
        """Downsampling keeps resolved modes."""
        s = np.arange(32) / 32
        values = np.cos(2 * np.pi * s) + np.sin(6 * np.pi * s)
        coarse = np.arange(16) / 16
        np.testing.assert_allclose(
            resample_axis(values, 16), np.cos(2 * np.pi * coarse) + np.sin(6 * np.pi * coarse), atol=1e-12
        )

    def test_shifted_samples(self):
        """Shift moves the samples by a fraction of the target step."""
        s = np.arange(16) / 16
        shifted = (np.arange(16) + 0.5) / 16
        np.testing.assert_allclose(
            resample_axis(np.cos(2 * np.pi * s), 16, shift=0.5), np.cos(2 * np.pi * shifted), atol=1e-12
        )

    def test_fourier_evaluate(self):
        """The interpolant reproduces a trigonometric polynomial off the grid."""
        s, t = np.meshgrid(np.arange(16) / 16, np.arange(16) / 16, indexing="ij")
        points_s = np.array([0.013, 0.4, 0.77])
        points_t = np.array([0.9, 0.31, 0.05])
        np.testing.assert_allclose(fourier_evaluate(trig(s, t), points_s, points_t), trig(points_s, points_t), atol=1e-12)


class TestForms:
    """Tests for the discrete exterior derivative."""

    def test_exact_form_curl_vanishes(self):
        """d(dg) vanishes up to O(h^2) for a periodic g."""
        lattice = TorusLattice(2.0 + 0.0j, 0.5 + 1.5j)
        errors = []
        for n in (16, 32):
            z = lattice.points(n, n)
            kx, ky = np.linalg.solve(lattice.basis, [2 * np.pi, 2 * np.pi])
            phase = kx * z.real + ky * z.imag
            curl = plaquette_curl(-kx * np.sin(phase), -ky * np.sin(phase), lattice)
            errors.append(np.max(np.abs(curl)))
        assert np.log2(errors[0] / errors[1]) > 1.8

    def test_shear_form_curl(self):
        """sin(2 pi y) dx has curl -2 pi cos(2 pi y), sampled at cell centers."""
        lattice = TorusLattice.rectangular(1.0, 1.0)
        n = 32
        z = lattice.points(n, n)
        curl = plaquette_curl(np.sin(2 * np.pi * z.imag), np.zeros((n, n)), lattice)
        expected = -2 * np.pi * np.cos(2 * np.pi * (z.imag + 0.5 / n))
        np.testing.assert_allclose(curl, expected, atol=0.02)

    def test_star_squares_to_minus_one(self):
        """** = -1 on 1-forms."""
        wx, wy = np.array([1.0, 2.0]), np.array([3.0, 4.0])
        sx, sy = star(*star(wx, wy))
        np.testing.assert_allclose(sx, -wx)
        np.testing.assert_allclose(sy, -wy)
