"""Analysis pipeline: surface -> frames -> sphere -> Hopf fields -> multiplier -> family."""

import json
import time
from pathlib import Path
from typing import Any, Callable, Optional, TypeVar

import numpy as np
import pandas as pd

from src.common.config import RunConfig
from src.common.exceptions import ConfigError, CwHolonomyError, SpectralError, SurfaceError
from src.common.logging import get_logger
from src.common.types import (
    AnalysisReport,
    CaseKind,
    CaseLabel,
    DarbouxQualityReport,
    HolonomySweep,
    PipelineState,
    PipelineStep,
    StepTiming,
)
from src.common.utils import DeterministicManager
from src.darboux import DarbouxMap, darboux_transform, eigen_section, export_mesh, transform_quality
from src.family import MuForm, connection_form, fixture_family
from src.harmonic import backlund_points, compare_holonomies, harmonic_map_grid, infinity_chart, rank1_family
from src.holonomy import HolonomyClassifier, circle_samples
from src.moebius import (
    CircleGrid,
    HarmonicNormal,
    HopfGrid,
    SphereCongruenceGrid,
    apply_eta,
    degree_from_energies,
    el_residual,
    hopf_fields,
    mean_curvature_sphere,
    normal_degree,
    parse_policy,
    willmore_energy,
    willmore_energy_dual,
)
from src.spectral import SpectralReport, spectral_curve
from src.surface import (
    FrameGrid,
    SurfaceSpec,
    builtin_surface,
    read_surface,
    sample_frames,
    sphere_mean_curvature,
    write_surface,
)

logger = get_logger(__name__)

T = TypeVar("T")

EIGHT_PI = 8.0 * np.pi
# |deg_perp - (E_A - E_Q)/4pi| above which the degree is flagged
DEGREE_SLACK = 0.25
# ||f| - 1| below which the surface is treated as lying in S^3
SPHERE_DEFECT = 1e-8


def write_json(path: Path, payload: dict[str, Any]) -> Path:
    """Deterministic JSON: sorted keys, fixed indentation."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


class PipelineManager:
    """Runs the analysis steps lazily and caches their products.

    Each product is computed on first use and timed into the pipeline state,
    so a command only pays for the steps it needs.
    """

    def __init__(self, config: RunConfig):
        """Initialize the pipeline manager.

        Args:
            config: Validated run configuration
        """
        self.config = config
        self._state = PipelineState()
        self._cache: dict[PipelineStep, Any] = {}
        DeterministicManager.set_seed(config.seed)

    # ------------------------------------------------------------------ steps

    def _step(self, step: PipelineStep, build: Callable[[], T]) -> T:
        if step in self._cache:
            return self._cache[step]
        start = time.perf_counter()
        try:
            value = build()
        except CwHolonomyError as exc:
            self._state.error = str(exc)
            logger.error("pipeline_step_failed", step=step.value, error=str(exc))
            raise
        seconds = time.perf_counter() - start
        self._cache[step] = value
        self._state.completed_steps.append(step)
        self._state.timings.append(StepTiming(step=step, seconds=seconds))
        logger.debug("pipeline_step_done", step=step.value, seconds=seconds)
        return value

    def get_state(self) -> PipelineState:
        return self._state

    @property
    def fixture(self) -> Optional[str]:
        """Name of the synthetic family when the source is 'fixture:NAME'."""
        source = self.config.surface
        return source.source.split(":", 1)[1] if source.is_fixture else None

    def surface(self) -> SurfaceSpec:
        def build() -> SurfaceSpec:
            source = self.config.surface
            if source.is_fixture:
                raise SurfaceError("Fixture sources carry no surface", {"source": source.source})
            if source.is_file:
                return read_surface(source.source.split(":", 1)[1])
            return builtin_surface(source.source, source.params)

        return self._step(PipelineStep.SURFACE, build)

    def frames(self) -> FrameGrid:
        grid = self.config.grid
        return self._step(
            PipelineStep.FRAMES,
            lambda: sample_frames(self.surface(), grid.n1, grid.n2, conformal_tol=self.config.tolerances.conformal),
        )

    def sphere(self) -> SphereCongruenceGrid:
        return self._step(PipelineStep.SPHERE, lambda: mean_curvature_sphere(self.frames()))

    def hopf(self) -> HopfGrid:
        return self._step(PipelineStep.HOPF, lambda: hopf_fields(self.frames(), self.sphere()))

    def circles(self) -> CircleGrid:
        eta = self.config.eta
        return self._step(
            PipelineStep.MULTIPLIER,
            lambda: apply_eta(self.hopf(), parse_policy(eta.policy, eta.ambient), self.config.tolerances.eta),
        )

    def family(self) -> MuForm:
        def build() -> MuForm:
            if self.fixture is not None:
                return fixture_family(self.fixture, n1=self.config.grid.n1, n2=self.config.grid.n2)
            return connection_form(self.circles())

        return self._step(PipelineStep.FAMILY, build)

    def classifier(self) -> HolonomyClassifier:
        return HolonomyClassifier(
            self.family(),
            base_point=self.config.grid.base_point,
            tolerances=self.config.tolerances,
            transport_settings=self.config.transport,
            workers=self.config.workers,
        )

    # --------------------------------------------------------------- commands

    def analyze(self) -> AnalysisReport:
        """Energy, degree and residual summary of the configured surface."""
        frames, hg = self.frames(), self.hopf()
        cg = self.circles()
        deg_perp = normal_degree(frames)
        energy = willmore_energy(hg, deg_perp)
        dual = willmore_energy_dual(hg, deg_perp)
        implied = degree_from_energies(hg)
        curvature = sphere_mean_curvature(frames)
        in_sphere = curvature.ambient_defect < SPHERE_DEFECT

        expected = None
        if self.config.eta.policy == "zero" and deg_perp == 0:
            expected = "II iff ker A_o constant" if energy < EIGHT_PI else "I"

        report = AnalysisReport(
            surface=self.config.surface.source,
            dims=frames.shape,
            lattice=frames.lattice.as_dict(),
            eta_policy=cg.policy,
            willmore_energy=energy,
            willmore_energy_dual=dual,
            umbilic_energy=2.0 * energy,
            deg_perp=deg_perp,
            deg_perp_from_energy=implied,
            degree_consistent=abs(implied - deg_perp) < DEGREE_SLACK,
            el_residual=el_residual(cg),
            conf_residual=frames.max_conformal_residual(),
            masked_points=len(frames.masked_points),
            sphere_mean_curvature=curvature.mean if in_sphere else None,
            sphere_mean_curvature_drift=curvature.drift if in_sphere else None,
            energy_below_8pi=energy < EIGHT_PI,
            expected_case=expected,
        )
        if not report.degree_consistent:
            logger.warning("degree_mismatch", deg_perp=deg_perp, from_energy=implied)
        logger.info("surface_analyzed", willmore_energy=energy, deg_perp=deg_perp, el_residual=report.el_residual)
        return report

    def classify(self) -> CaseLabel:
        sweep = self.config.sweep
        return self.classifier().classify(circle_samples(sweep.classify_radius, sweep.classify_samples))

    def holonomy_sweep(self) -> HolonomySweep:
        sweep = self.config.sweep
        return self.classifier().sweep(sweep.classify_radius, sweep.samples)

    def spectral(self, label: Optional[CaseLabel] = None) -> SpectralReport:
        """Spectral curve of the family; classifies first unless a label is given."""
        label = label or self.classify()
        return spectral_curve(
            self.family(),
            label,
            sweep=self.config.sweep,
            tolerances=self.config.tolerances,
            transport_settings=self.config.transport,
            base_point=self.config.grid.base_point,
            workers=self.config.workers,
        )

    def darboux(self) -> tuple[DarbouxMap, DarbouxQualityReport]:
        """Darboux transform from the configured eigenline.

        Raises:
            ConfigError: If the eigen index does not select a simple eigenvalue at mu.
        """
        sweep = self.config.sweep
        mf = self.family()
        if sweep.eigen_index >= mf.dim:
            raise ConfigError("Eigen index out of range", {"index": sweep.eigen_index, "dim": mf.dim})
        try:
            ps = eigen_section(
                mf,
                sweep.mu_value,
                sweep.eigen_index,
                self.config.grid.base_point,
                tolerances=self.config.tolerances,
                transport_settings=self.config.transport,
            )
        except SpectralError as exc:
            raise ConfigError(
                "Eigen index selects no simple eigenvalue at mu",
                {"index": sweep.eigen_index, "mu": str(sweep.mu_value)},
            ) from exc
        dm = darboux_transform(ps, self.frames(), max_mask=self.config.tolerances.mask_fraction)
        return dm, transform_quality(dm, eta_zero=self.config.eta.policy == "zero")

    def harmonic(self) -> pd.DataFrame:
        """Stripped 4x4 eigenvalues against the rank-1 family of the left normal.

        A surface whose im(Q_o) is a constant point other than infinity is
        first moved by the Moebius transformation that sends it to infinity;
        in that chart the multiplier is the left harmonic one.
        """
        cg = self.circles()
        lines = backlund_points(cg, self.config.tolerances.rank)
        if not lines.constant_image():
            raise ConfigError("im(Q_o) is not constant; no rank-1 reduction", {"policy": cg.policy})
        spec = self.surface()
        rotated = infinity_chart(spec, cg)
        frames, mf = self.frames(), None
        if rotated is not spec:
            grid = self.config.grid
            frames = sample_frames(rotated, grid.n1, grid.n2, conformal_tol=self.config.tolerances.conformal)
            hg = hopf_fields(frames, mean_curvature_sphere(frames))
            cg = apply_eta(hg, HarmonicNormal("left"), self.config.tolerances.eta)
            mf = connection_form(cg)
            logger.info("chart_rotated", policy=cg.policy)
        mf = mf or self.family()
        rf = rank1_family(harmonic_map_grid(frames.N, frames.lattice))
        sweep = self.config.sweep
        return compare_holonomies(
            mf,
            rf,
            circle_samples(sweep.classify_radius, sweep.classify_samples),
            tolerances=self.config.tolerances,
            transport_settings=self.config.transport,
            workers=self.config.workers,
        )

    def convert(self, path: Path) -> Path:
        """Sample the configured surface and write it as a sampled-surface document."""
        spec = self.surface()
        f, _, _ = spec.evaluate_grid(self.config.grid.n1, self.config.grid.n2)
        return write_surface(path, spec.lattice, f)

    def export_darboux(self, dm: DarbouxMap, path: Path) -> Path:
        return export_mesh(dm, path)

    @staticmethod
    def is_undetermined(label: CaseLabel) -> bool:
        return label.label == CaseKind.UNDETERMINED
