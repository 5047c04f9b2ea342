"""Spectral curve reports: JSON summary and CSV branches."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from src.common.config import SweepConfig, ToleranceConfig, TransportConfig
from src.common.logging import get_logger
from src.common.types import BranchPointRecord, CaseKind, CaseLabel, SpectralSummary
from src.family import MuForm

from .branching import BranchPoint, branch_points, end_permutation, exclusion_reach, involution_residual
from .genus import genus_estimate
from .sampling import SpectralSample, SpectralSampler, samples_frame

logger = get_logger(__name__)


def _pair(z: complex) -> tuple[float, float]:
    return (float(np.real(z)), float(np.imag(z)))


def _reversed_loop(perm: Optional[tuple[int, ...]]) -> Optional[list[int]]:
    """Inverse permutation: a loop around infinity runs clockwise around the origin."""
    if perm is None:
        return None
    inverse = [0] * len(perm)
    for k, image in enumerate(perm):
        inverse[image] = k
    return inverse


@dataclass(frozen=True)
class SpectralReport:
    """Everything computed about the spectral curve of one family."""

    case: CaseKind
    generator: str
    sheets: int
    annulus: tuple[float, float]
    rings: list[list[SpectralSample]]
    branch_points: list[BranchPoint]
    double_points: list[BranchPoint]
    genus_low: int
    genus_high: int
    end_permutations: dict[str, Optional[list[int]]]
    involution_residual: float
    note: Optional[str] = None

    @property
    def samples(self) -> list[SpectralSample]:
        return [s for ring in self.rings for s in ring]

    @property
    def flagged_samples(self) -> int:
        return sum(s.flagged for s in self.samples)

    @property
    def genus(self) -> Optional[int]:
        return self.genus_low if self.genus_low == self.genus_high else None

    def to_summary(self) -> SpectralSummary:
        return SpectralSummary(
            case=self.case,
            sheets=self.sheets,
            generator=self.generator,
            annulus=self.annulus,
            branch_points=[
                BranchPointRecord(
                    mu=_pair(p.mu),
                    permutation=list(p.permutation) if p.resolved else None,
                    ramification=p.ramification if p.resolved else None,
                    winding=p.winding,
                )
                for p in self.branch_points
            ],
            double_points=[_pair(p.mu) for p in self.double_points],
            genus_low=self.genus_low,
            genus_high=self.genus_high,
            end_permutations=self.end_permutations,
            involution_residual=self.involution_residual,
            flagged_samples=self.flagged_samples,
            note=self.note,
        )

    def to_frame(self) -> pd.DataFrame:
        return samples_frame(self.samples)

    def write(self, out_dir: str | Path) -> tuple[Path, Path]:
        """Write spectral_summary.json and spectral_samples.csv."""
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        summary_path = out / "spectral_summary.json"
        csv_path = out / "spectral_samples.csv"
        summary_path.write_text(json.dumps(self.to_summary().model_dump(mode="json"), indent=2))
        self.to_frame().to_csv(csv_path, index=False)
        logger.info("spectral_report_written", summary=str(summary_path), samples=str(csv_path))
        return summary_path, csv_path


def spectral_curve(
    mf: MuForm,
    label: CaseLabel,
    sweep: Optional[SweepConfig] = None,
    tolerances: Optional[ToleranceConfig] = None,
    transport_settings: Optional[TransportConfig] = None,
    base_point: tuple[int, int] = (0, 0),
    workers: int = 1,
    levels: int = 4,
    with_multipliers: bool = False,
) -> SpectralReport:
    """Sample the annulus, locate branch points, read off the end permutations and estimate the genus.

    Raises:
        NoSpectralCurveError: For Case III labels.
        SpectralError: If the trivial eigenvalue cannot be stripped.
    """
    sweep = sweep or SweepConfig()
    sampler = SpectralSampler.from_label(
        mf,
        label,
        base_point=base_point,
        tolerances=tolerances or ToleranceConfig(),
        transport_settings=transport_settings or TransportConfig(),
        exclusion_radius=sweep.exclusion_radius,
        workers=workers,
    )
    return curve_from_sampler(sampler, sweep, levels, with_multipliers)


def curve_from_sampler(
    sampler: SpectralSampler,
    sweep: SweepConfig,
    levels: int = 4,
    with_multipliers: bool = False,
    case: Optional[CaseKind] = None,
) -> SpectralReport:
    """Spectral report for a configured sampler; `case` selects the genus formula when it differs from the sampler's."""
    rings = sampler.annulus(sweep.r_min, sweep.r_max, sweep.circles, sweep.samples, with_multipliers)
    branch, double = branch_points(sampler, sweep.r_min, sweep.r_max, sweep.circles, sweep.samples, levels)
    inner = end_permutation(sampler, sweep.r_min, sweep.samples)
    outer = end_permutation(sampler, sweep.r_max, sweep.samples)
    ends = {"0": None if inner is None else list(inner), "inf": _reversed_loop(outer)}
    case = case or sampler.case
    low, high, note = genus_estimate(case, branch, ends)
    report = SpectralReport(
        case=case,
        generator=sampler.generator,
        sheets=sampler.sheets,
        annulus=(sweep.r_min, sweep.r_max),
        rings=rings,
        branch_points=branch,
        double_points=double,
        genus_low=low,
        genus_high=high,
        end_permutations=ends,
        involution_residual=involution_residual(
            branch + double,
            sweep.r_min,
            sweep.r_max,
            exclude=exclusion_reach(
                sweep.r_min, sweep.r_max, sweep.circles, sweep.samples, sampler.exclusion_radius, levels
            ),
        ),
        note=note,
    )
    logger.info(
        "spectral_curve_computed",
        case=report.case.value,
        branch_points=len(branch),
        genus_low=low,
        genus_high=high,
    )
    return report
