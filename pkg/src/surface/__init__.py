"""Torus immersions, their sampled frames and mapping degrees."""

from .lattice import TorusLattice
from .generators import (
    SurfaceSpec,
    AnalyticSurface,
    HomogeneousSurface,
    CliffordSurface,
    HslSurface,
    SampledSurface,
    MoebiusImageSurface,
    builtin_surface,
    moebius_image,
)
from .hopf import HopfSurface, latitude_curve
from .frames import (
    FrameGrid,
    CurvatureSummary,
    sample_frames,
    conformality_residual,
    finite_difference_partials,
    sphere_mean_curvature,
    euclidean_cmc_drift,
)
from .degree import DegreeResult, degree
from .forms import plaquette_curl, star
from .io import read_surface, write_surface, parse_surface, surface_document

__all__ = [
    "TorusLattice",
    "SurfaceSpec",
    "AnalyticSurface",
    "HomogeneousSurface",
    "CliffordSurface",
    "HslSurface",
    "SampledSurface",
    "MoebiusImageSurface",
    "builtin_surface",
    "moebius_image",
    "HopfSurface",
    "latitude_curve",
    "FrameGrid",
    "CurvatureSummary",
    "sample_frames",
    "conformality_residual",
    "finite_difference_partials",
    "sphere_mean_curvature",
    "euclidean_cmc_drift",
    "DegreeResult",
    "degree",
    "plaquette_curl",
    "star",
    "read_surface",
    "write_surface",
    "parse_surface",
    "surface_document",
]
