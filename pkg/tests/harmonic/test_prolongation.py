"""Tests for the prolongation of rank-1 sections into the 4x4 family."""

import numpy as np
import pytest

from src.common.exceptions import HarmonicError
from src.darboux import parallel_section
from src.harmonic import backlund_points, harmonic_map_grid, infinity_chart, prolong_embed, rank1_family
from src.moebius import HarmonicNormal, apply_eta, hopf_fields, mean_curvature_sphere
from src.surface import MoebiusImageSurface, sample_frames

SEED = np.array([1.0, 0.3j])


class TestProlongEmbed:
    """Tests for prolong_embed."""

    def test_parallel_in_four_dimensions(self, clifford_rank1, clifford_circles):
        """psi = (g + f chi, chi) is parallel for the 4x4 family up to the midpoint rule."""
        g = parallel_section(clifford_rank1.family, 2.0, SEED)
        prolonged = prolong_embed(g, clifford_circles[-0.5])
        assert prolonged.psi.shape == (32, 32, 4)
        assert prolonged.residual < 0.05

    def test_swapped_projectors_floor(self, clifford_rank1, clifford_circles):
        """Exchanging the projectors in chi breaks parallelity."""
        g = parallel_section(clifford_rank1.family, 2.0, SEED)
        good = prolong_embed(g, clifford_circles[-0.5]).residual
        bad = prolong_embed(g, clifford_circles[-0.5], swapped=True).residual
        assert bad > 1e-2
        assert bad > 10 * good

    def test_trivial_member(self, clifford_rank1, clifford_circles):
        """mu = 1 and constant g give constant psi = (g, 0)."""
        g = parallel_section(clifford_rank1.family, 1.0, SEED)
        prolonged = prolong_embed(g, clifford_circles[-0.5])
        assert prolonged.residual == 0.0
        np.testing.assert_array_equal(prolonged.chi, 0.0)
        np.testing.assert_allclose(prolonged.psi[..., :2], np.broadcast_to(SEED, (32, 32, 2)))

    def test_requires_image_at_infinity(self, clifford_rank1, clifford_circles):
        """For rho = 1/2 the image line is the point 0, not infinity."""
        g = parallel_section(clifford_rank1.family, 2.0, SEED)
        with pytest.raises(HarmonicError):
            prolong_embed(g, clifford_circles[0.5])

    def test_requires_rank1_section(self, clifford_families, clifford_circles):
        """A 4x4 section cannot be prolonged."""
        ps = parallel_section(clifford_families[-0.5], 2.0, np.eye(4)[0])
        with pytest.raises(HarmonicError):
            prolong_embed(ps, clifford_circles[-0.5])


class TestInfinityChart:
    """Tests for infinity_chart."""

    def test_already_at_infinity(self, clifford, clifford_circles):
        """rho = -1/2 needs no rotation."""
        assert infinity_chart(clifford, clifford_circles[-0.5]) is clifford

    def test_rotates_zero_to_infinity(self, clifford, clifford_circles):
        """rho = 1/2 is rotated by f -> f^-1; the left-harmonic multiplier then has im(Q_o) = infinity."""
        rotated = infinity_chart(clifford, clifford_circles[0.5])
        assert isinstance(rotated, MoebiusImageSurface)
        fg = sample_frames(rotated, 32, 32)
        cg = apply_eta(hopf_fields(fg, mean_curvature_sphere(fg)), HarmonicNormal("left"))
        lines = backlund_points(cg)
        assert lines.image_residual < 1e-8

    @pytest.mark.slow
    def test_second_order_convergence(self, clifford, clifford_circles):
        """After rotating rho = 1/2 into the chart, the parallel residual decays like h^2."""
        rotated = infinity_chart(clifford, clifford_circles[0.5])
        residuals = []
        for n in (32, 64, 128):
            fg = sample_frames(rotated, n, n)
            cg = apply_eta(hopf_fields(fg, mean_curvature_sphere(fg)), HarmonicNormal("left"))
            rf = rank1_family(harmonic_map_grid(fg.N, fg.lattice))
            g = parallel_section(rf.family, 2.0, SEED)
            residuals.append(prolong_embed(g, cg).residual)
        slopes = np.log2(np.array(residuals[:-1]) / np.array(residuals[1:]))
        np.testing.assert_allclose(slopes, 2.0, atol=0.3)
