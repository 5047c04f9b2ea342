"""Harmonic maps into S^2, the rank-1 family, CMC rho-families and Backlund transforms."""

from .normals import HarmonicMapGrid, harmonic_map_grid, harmonicity_residual
from .rank1 import (
    Rank1Family,
    compare_holonomies,
    harmonic_spectral,
    rank1_family,
    rank1_holonomy,
    willmore_form,
)
from .cmc import CmcData, cmc_data, cmc_eta_family, cmc_omega, dual_curvature_residual, eta0
from .backlund import BacklundLines, affine_point, backlund_points, line_distance, quaternionic_line
from .prolongation import ProlongedSection, chi_field, infinity_chart, prolong_embed

__all__ = [
    "HarmonicMapGrid",
    "harmonic_map_grid",
    "harmonicity_residual",
    "Rank1Family",
    "compare_holonomies",
    "harmonic_spectral",
    "rank1_family",
    "rank1_holonomy",
    "willmore_form",
    "CmcData",
    "cmc_data",
    "cmc_eta_family",
    "cmc_omega",
    "dual_curvature_residual",
    "eta0",
    "BacklundLines",
    "affine_point",
    "backlund_points",
    "line_distance",
    "quaternionic_line",
    "ProlongedSection",
    "chi_field",
    "infinity_chart",
    "prolong_embed",
]
