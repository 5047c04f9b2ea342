"""Tests for the analysis pipeline manager."""

import numpy as np
import pytest

from src.common.config import EtaConfig, GridConfig, RunConfig, SurfaceConfig, SweepConfig
from src.common.exceptions import ConfigError, SurfaceError
from src.common.types import CaseKind, PipelineStep
from src.orchestrator import PipelineManager


def make_config(source="clifford", eta="zero", n=32, **sweep) -> RunConfig:
    return RunConfig(
        surface=SurfaceConfig(source=source),
        grid=GridConfig(n1=n, n2=n),
        eta=EtaConfig(policy=eta),
        sweep=SweepConfig(classify_samples=8, **sweep),
    )


class TestPipelineSteps:
    """Tests for step caching and state."""

    def test_steps_are_cached(self):
        """Each step runs once and is recorded in order."""
        pm = PipelineManager(make_config())
        first = pm.frames()
        assert pm.frames() is first
        state = pm.get_state()
        assert state.completed_steps == [PipelineStep.SURFACE, PipelineStep.FRAMES]
        assert len(state.timings) == 2
        assert state.error is None

    def test_family_pulls_all_steps(self):
        """The family depends on every earlier step."""
        pm = PipelineManager(make_config(eta="cmc:0.5"))
        mf = pm.family()
        assert mf.dim == 4
        assert pm.get_state().completed_steps == [
            PipelineStep.SURFACE,
            PipelineStep.FRAMES,
            PipelineStep.SPHERE,
            PipelineStep.HOPF,
            PipelineStep.MULTIPLIER,
            PipelineStep.FAMILY,
        ]

    def test_fixture_has_no_surface(self):
        """Synthetic families skip the geometry and refuse surface steps."""
        pm = PipelineManager(make_config(source="fixture:zero", n=16))
        assert pm.family().kind == "fixture:zero"
        with pytest.raises(SurfaceError):
            pm.surface()
        assert pm.get_state().error is not None


class TestPipelineCommands:
    """Tests for the command methods."""

    def test_analyze_clifford(self):
        """W = 2 pi^2, umbilic energy 4 pi^2, deg_perp = 0, minimal in S^3."""
        report = PipelineManager(make_config()).analyze()
        assert report.willmore_energy == pytest.approx(2 * np.pi**2, rel=1e-8)
        assert report.umbilic_energy == pytest.approx(4 * np.pi**2, rel=1e-8)
        assert report.willmore_energy_dual == pytest.approx(report.willmore_energy, rel=1e-8)
        assert report.deg_perp == 0
        assert report.degree_consistent
        assert abs(report.sphere_mean_curvature) < 1e-10
        assert report.energy_below_8pi
        assert report.expected_case == "II iff ker A_o constant"
        assert report.dims == (32, 32)

    def test_analyze_without_expectation(self):
        """The case hint is only given for the zero multiplier."""
        report = PipelineManager(make_config(eta="cmc:0.5")).analyze()
        assert report.expected_case is None
        assert report.el_residual < 0.1

    def test_classify_fixture(self):
        """The zero fixture is Case IIIa."""
        label = PipelineManager(make_config(source="fixture:zero", n=16)).classify()
        assert label.label == CaseKind.IIIA

    def test_darboux_trivial_member(self):
        """mu = 1 gives the constant transform at the point 0."""
        dm, quality = PipelineManager(make_config(mu="1")).darboux()
        assert dm.degenerate
        assert quality.degenerate
        np.testing.assert_allclose(quality.constant_value, 0.0, atol=1e-12)

    def test_darboux_bad_index(self):
        """An eigen index beyond the rank is a configuration error."""
        with pytest.raises(ConfigError):
            PipelineManager(make_config(eigen_index=6)).darboux()

    def test_harmonic_pairs(self):
        """With im(Q_o) = infinity the stripped eigenvalues match the rank-1 family."""
        frame = PipelineManager(make_config(eta="cmc:-0.5")).harmonic()
        assert len(frame) == 16
        assert frame["abs_diff"].max() < 1e-6

    def test_harmonic_rotates_chart(self):
        """rho = 1/2 has im(Q_o) = 0 and is compared after sending 0 to infinity."""
        frame = PipelineManager(make_config(eta="cmc:0.5")).harmonic()
        assert frame["abs_diff"].max() < 1e-6

    def test_convert(self, temp_output_dir):
        """Converted surfaces are readable sampled-surface documents."""
        from src.surface import read_surface

        path = PipelineManager(make_config(n=16)).convert(temp_output_dir / "clifford.json")
        surface = read_surface(path)
        f, _, _ = surface.evaluate_grid(16, 16)
        assert f.shape == (16, 16, 4)
