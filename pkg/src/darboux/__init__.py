"""Parallel sections of the associated family and their Darboux transforms."""

from .sections import (
    ParallelSection,
    asymptotic_residual,
    edge_transports,
    eigen_section,
    grid_holonomies,
    line_projection,
    parallel_section,
    prolongation_residual,
    refine_seed,
    trivial_seeds,
)
from .transform import DarbouxMap, darboux_transform, export_mesh, line_projectors, transform_quality

__all__ = [
    "ParallelSection",
    "asymptotic_residual",
    "edge_transports",
    "eigen_section",
    "grid_holonomies",
    "line_projection",
    "parallel_section",
    "prolongation_residual",
    "refine_seed",
    "trivial_seeds",
    "DarbouxMap",
    "darboux_transform",
    "export_mesh",
    "line_projectors",
    "transform_quality",
]
