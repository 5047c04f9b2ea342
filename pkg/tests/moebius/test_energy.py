"""Tests for the Willmore energy, normal degree and Euler-Lagrange residual."""

import dataclasses

import numpy as np
import pytest

from src.quatlin import algebra
from src.moebius import (
    CmcRho,
    ZeroEta,
    apply_eta,
    degree_from_energies,
    el_residual,
    hopf_energy,
    hopf_fields,
    mean_curvature_sphere,
    normal_degree,
    willmore_energy,
    willmore_energy_dual,
)
from src.surface import HopfSurface, builtin_surface, latitude_curve, sample_frames


def hopf_grid(frames):
    return hopf_fields(frames, mean_curvature_sphere(frames))


class TestWillmoreEnergy:
    """Tests for willmore_energy and friends."""

    def test_clifford_energy(self, clifford_frames):
        """The Clifford torus has W = 2 pi^2 from both Hopf fields."""
        hg = hopf_grid(clifford_frames)
        deg = normal_degree(clifford_frames)
        assert deg == 0
        assert willmore_energy(hg, deg) == pytest.approx(2 * np.pi**2, rel=1e-8)
        assert willmore_energy_dual(hg, deg) == pytest.approx(2 * np.pi**2, rel=1e-8)

    def test_homogeneous_energy(self, homogeneous_frames):
        """A homogeneous torus with radii r, s has W = pi^2 / (r s)."""
        hg = hopf_grid(homogeneous_frames)
        expected = np.pi**2 / (0.6 * 0.8)
        assert willmore_energy(hg, normal_degree(homogeneous_frames)) == pytest.approx(expected, rel=1e-8)

    def test_energy_is_shift_invariant(self, clifford):
        """Moving the grid does not change the quadrature."""
        shifted = sample_frames(clifford, 32, 32, offset=(0.3, 0.7))
        assert hopf_energy(hopf_grid(shifted), "A") == pytest.approx(2 * np.pi**2, rel=1e-8)

    def test_energies_agree_on_degree(self, clifford_frames):
        """The two quadratures imply deg_perp = 0 for the Clifford torus."""
        assert degree_from_energies(hopf_grid(clifford_frames)) == pytest.approx(0.0, abs=1e-8)

    def test_vanishing_a_field(self, clifford_frames):
        """With A = 0 the energy reduces to -2 pi deg_perp."""
        hg = hopf_grid(clifford_frames)
        zero = np.zeros_like(hg.A2x)
        synthetic = dataclasses.replace(hg, A2x=zero, A2y=zero)
        assert willmore_energy(synthetic, -1) == pytest.approx(2 * np.pi)

    def test_unknown_side(self, clifford_frames):
        """Only the A and Q sides exist."""
        with pytest.raises(ValueError):
            hopf_energy(hopf_grid(clifford_frames), "B")


class TestNormalDegree:
    """Tests for normal_degree."""

    def test_covering_left_normal(self, clifford_frames, bump_field):
        """A left normal covering S^2 once shifts deg_perp by one."""
        bump = algebra.from_imag(bump_field(32))
        synthetic = dataclasses.replace(clifford_frames, N=bump)
        assert abs(normal_degree(synthetic)) == 1

    def test_covering_right_normal(self, clifford_frames, bump_field):
        """The right normal enters with the opposite sign."""
        bump = algebra.from_imag(bump_field(32))
        left = normal_degree(dataclasses.replace(clifford_frames, N=bump))
        right = normal_degree(dataclasses.replace(clifford_frames, R=bump))
        assert left == -right


class TestElResidual:
    """Tests for el_residual."""

    def test_clifford_is_willmore(self, clifford, clifford_frames):
        """The Clifford torus has W = 2 pi^2 and a residual that vanishes under refinement."""
        hg = hopf_grid(clifford_frames)
        assert willmore_energy(hg, normal_degree(clifford_frames)) == pytest.approx(2 * np.pi**2, rel=1e-8)
        coarse = el_residual(apply_eta(hg, ZeroEta()))
        fine = el_residual(apply_eta(hopf_grid(sample_frames(clifford, 64, 64)), ZeroEta()))
        assert coarse < 0.1
        assert fine <= coarse / 3 + 1e-10

    @pytest.mark.slow
    def test_second_order_convergence(self, clifford):
        """Doubling the grid divides the residual by about four."""
        coarse = el_residual(apply_eta(hopf_grid(sample_frames(clifford, 16, 16)), CmcRho(0.25)))
        fine = el_residual(apply_eta(hopf_grid(sample_frames(clifford, 32, 32)), CmcRho(0.25)))
        finer = el_residual(apply_eta(hopf_grid(sample_frames(clifford, 64, 64)), CmcRho(0.25)))
        assert np.log2(coarse / fine) == pytest.approx(2.0, abs=0.3)
        assert np.log2(fine / finer) == pytest.approx(2.0, abs=0.3)

    @pytest.mark.slow
    def test_wobbly_hopf_is_not_willmore(self, clifford):
        """A Hopf torus over a non-elastic curve does not solve the Willmore equation with eta = 0."""
        surface = HopfSurface(latitude_curve(height=0.2, wobble=0.15, frequency=2, samples=128))
        coarse = el_residual(apply_eta(hopf_grid(sample_frames(surface, 32, 16)), ZeroEta()))
        fine = el_residual(apply_eta(hopf_grid(sample_frames(surface, 64, 32)), ZeroEta()))
        reference = el_residual(apply_eta(hopf_grid(sample_frames(clifford, 64, 64)), ZeroEta()))
        assert fine > 0.5 * coarse
        assert fine > 100 * reference

    def test_homogeneous_cmc_member(self):
        """Homogeneous tori are constrained Willmore for every rho."""
        frames = sample_frames(builtin_surface("homogeneous", {"r": 0.6}), 64, 64)
        residual = el_residual(apply_eta(hopf_grid(frames), CmcRho(0.3)))
        assert residual < 0.05
