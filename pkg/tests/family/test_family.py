"""Tests for the associated family, its dual and the gauge between them."""

import dataclasses

import numpy as np
import pytest

from src.common.exceptions import FamilyError, GaugeSingularError
from src.family import (
    connection_form,
    contragredient,
    dual_family,
    fixture_family,
    flatness_residual,
    gauge_matrix,
    jordan_family,
    symmetry_residual,
    zero_family,
)
from src.moebius import ZeroEta, apply_eta, hopf_fields, mean_curvature_sphere
from src.quatlin import algebra
from src.surface import HopfSurface, latitude_curve, sample_frames


class TestConnectionForm:
    """Tests for connection_form."""

    def test_projector_sum(self, clifford_families, clifford_circles):
        """P + M is the complexified A_o."""
        mf = clifford_families[0.0]
        ax, ay, _, _ = clifford_circles[0.0].modified()
        tx, ty = mf.total()
        np.testing.assert_allclose(tx, algebra.embed_qmat(ax), atol=1e-12)
        np.testing.assert_allclose(ty, algebra.embed_qmat(ay), atol=1e-12)

    def test_complementary_projectors(self, clifford_families, clifford_hopf):
        """(1 + iS)/2 annihilates the (1,0) part."""
        S = clifford_hopf.sphere.embedded()
        mf = clifford_families[0.0]
        residual = (np.eye(4) + 1j * S) @ mf.Px
        assert np.max(np.abs(residual)) < 1e-10

    def test_typing(self, clifford_families):
        """*P = P i and *M = -M i."""
        for mf in clifford_families.values():
            assert mf.typing_residual() < 1e-9

    def test_trivial_at_one(self, clifford_families):
        """Omega(1) = 0 exactly."""
        ox, oy = clifford_families[0.5].evaluate(1.0)
        assert not ox.any() and not oy.any()

    def test_laurent_interpolation(self, clifford_families):
        """Two evaluations determine P and M, which reproduce a third."""
        mf = clifford_families[0.0]
        mu1, mu2, mu3 = 2.0, -0.5 + 0.5j, 0.3 + 1.2j
        o1, _ = mf.evaluate(mu1)
        o2, _ = mf.evaluate(mu2)
        system = np.array([[mu1 - 1, 1 / mu1 - 1], [mu2 - 1, 1 / mu2 - 1]])
        inv = np.linalg.inv(system)
        P = inv[0, 0] * o1 + inv[0, 1] * o2
        M = inv[1, 0] * o1 + inv[1, 1] * o2
        o3, _ = mf.evaluate(mu3)
        np.testing.assert_allclose((mu3 - 1) * P + (1 / mu3 - 1) * M, o3, atol=1e-12)

    def test_constant_kernel_at_rho_half(self, clifford_families):
        """At rho = 1/2 both parts vanish on the complexified line (1, 0)H."""
        mf = clifford_families[0.5]
        for coeff in (mf.Px, mf.Py, mf.Mx, mf.My):
            assert np.max(np.abs(coeff[..., :, :2])) < 1e-10

    def test_zero_mu_rejected(self, clifford_families):
        """mu = 0 is not a spectral parameter."""
        with pytest.raises(FamilyError):
            clifford_families[0.0].evaluate(0.0)

    def test_masked_base_point(self, clifford_families):
        """A masked base point is rejected."""
        mf = clifford_families[0.0]
        mask = mf.mask.copy()
        mask[3, 4] = False
        with pytest.raises(FamilyError, match="masked"):
            dataclasses.replace(mf, mask=mask).base_index((3, 4))


class TestDualFamily:
    """Tests for dual_family and contragredient."""

    def test_trivial_at_one(self, clifford_circles):
        """The dual family is trivial at mu = 1."""
        ox, oy = dual_family(clifford_circles[0.0]).evaluate(1.0)
        assert not ox.any() and not oy.any()

    def test_super_conformal_is_trivial(self, clifford_hopf):
        """With Q = 0 and eta = 0 the dual family is trivial for every mu."""
        zero = np.zeros_like(clifford_hopf.Q2x)
        synthetic = dataclasses.replace(clifford_hopf, Q2x=zero, Q2y=zero)
        ox, oy = dual_family(apply_eta(synthetic, ZeroEta())).evaluate(2.0 + 1.0j)
        assert np.max(np.abs(ox)) == 0.0 and np.max(np.abs(oy)) == 0.0

    def test_dual_typing(self, clifford_circles):
        """The dual family splits into (1,0) and (0,1) parts as well."""
        assert dual_family(clifford_circles[0.0]).typing_residual() < 1e-9

    def test_contragredient(self, clifford_families):
        """The dual representation negates and transposes the coefficients."""
        mf = clifford_families[0.0]
        dual = contragredient(mf)
        np.testing.assert_array_equal(dual.Px, -np.swapaxes(mf.Px, -1, -2))
        np.testing.assert_array_equal(contragredient(dual).My, mf.My)


class TestGauge:
    """Tests for gauge_matrix."""

    def test_identity_at_one(self, clifford_hopf):
        """G(1) = 2 Id."""
        G = gauge_matrix(clifford_hopf.sphere, 1.0)
        np.testing.assert_allclose(G, np.broadcast_to(2 * np.eye(4), G.shape), atol=1e-15)

    def test_commutes_with_sphere(self, clifford_hopf):
        """G is a polynomial in S."""
        S = clifford_hopf.sphere.embedded()
        G = gauge_matrix(clifford_hopf.sphere, 0.4 - 2.0j)
        assert np.max(np.abs(G @ S - S @ G)) < 1e-10

    def test_singular_at_zero(self, clifford_hopf):
        """G(0) has the eigenvalue 2 mu = 0."""
        with pytest.raises(GaugeSingularError):
            gauge_matrix(clifford_hopf.sphere, 0.0)


class TestFlatness:
    """Tests for flatness_residual."""

    def test_exact_at_one(self, clifford_families):
        """The trivial member is exactly flat."""
        assert flatness_residual(clifford_families[0.0], 1.0) == 0.0

    @pytest.mark.parametrize("mu", [2.0, 0.5j, -1.5 + 0.5j])
    def test_clifford_is_flat(self, clifford_families, mu):
        """The Clifford family is flat away from mu = 1."""
        assert flatness_residual(clifford_families[0.0], mu) < 1e-3

    @pytest.mark.parametrize("name", ["zero", "jordan"])
    def test_fixtures_are_flat(self, name):
        """Constant commuting fixtures have trivial cell holonomy."""
        assert flatness_residual(fixture_family(name), 0.3 + 0.2j) < 1e-12

    def test_unknown_fixture(self):
        """Fixture names are checked."""
        with pytest.raises(FamilyError):
            fixture_family("spiral")

    @pytest.mark.slow
    def test_refinement(self, clifford):
        """Refining the grid lowers the residual."""
        residuals = []
        for n in (16, 32):
            frames = sample_frames(clifford, n, n)
            hg = hopf_fields(frames, mean_curvature_sphere(frames))
            residuals.append(flatness_residual(connection_form(apply_eta(hg, ZeroEta())), 2.0))
        assert residuals[1] < residuals[0] / 3

    @pytest.mark.slow
    def test_non_willmore_floor(self, clifford_families):
        """A wobbly Hopf torus with eta = 0 gives a non-flat family."""
        surface = HopfSurface(latitude_curve(height=0.2, wobble=0.15, frequency=2, samples=128))
        frames = sample_frames(surface, 64, 32)
        hg = hopf_fields(frames, mean_curvature_sphere(frames))
        residual = flatness_residual(connection_form(apply_eta(hg, ZeroEta())), 2.0)
        assert residual > 100 * flatness_residual(clifford_families[0.0], 2.0)


class TestSymmetry:
    """Tests for symmetry_residual."""

    @pytest.mark.parametrize("mu", [2.0, np.exp(0.7j), 0.3 - 0.8j])
    def test_quaternionic(self, clifford_families, mu):
        """Omega(1/conj(mu)) = J conj(Omega(mu)) J^-1."""
        assert symmetry_residual(clifford_families[0.0], mu) < 1e-12

    def test_noise_breaks_symmetry(self, clifford_families, rng):
        """Hermitian noise in M violates the quaternionic symmetry."""
        mf = clifford_families[0.0]
        noise = rng.normal(size=mf.Mx.shape) + 1j * rng.normal(size=mf.Mx.shape)
        noise = noise + np.conj(np.swapaxes(noise, -1, -2))
        corrupted = dataclasses.replace(mf, Mx=mf.Mx + noise)
        assert symmetry_residual(corrupted, 2.0) > 0.1

    def test_rank_one_structure(self):
        """A 2x2 family uses the 2x2 quaternionic structure."""
        mf = zero_family(dim=2)
        assert symmetry_residual(mf, 2.0) == 0.0

    def test_jordan_fixture_shape(self):
        """The Jordan fixture acts on C^4."""
        assert jordan_family().dim == 4
