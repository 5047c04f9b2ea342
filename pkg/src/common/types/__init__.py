"""Common types for the holonomy toolkit."""

from .geometry import SurfaceKind, Ambient, HarmonicSide
from .holonomy import CaseKind, MuEvidence, CaseLabel, HolonomyRecord, HolonomySweep
from .spectral import BranchPointRecord, SpectralSummary
from .reports import AnalysisReport, DarbouxQualityReport
from .pipeline import PipelineStep, StepTiming, PipelineState

__all__ = [
    # Geometry enums
    "SurfaceKind",
    "Ambient",
    "HarmonicSide",
    # Holonomy types
    "CaseKind",
    "MuEvidence",
    "CaseLabel",
    "HolonomyRecord",
    "HolonomySweep",
    # Spectral types
    "BranchPointRecord",
    "SpectralSummary",
    # Reports
    "AnalysisReport",
    "DarbouxQualityReport",
    # Pipeline types
    "PipelineStep",
    "StepTiming",
    "PipelineState",
]
