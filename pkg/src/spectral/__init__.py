"""Holonomy spectral curve: sampling, branch points, genus and multipliers."""

from .polynomials import (
    characteristic_polynomial,
    strip_trivial,
    trivial_order,
    discriminant,
    reconstruction_residual,
)
from .sampling import (
    SpectralSample,
    SpectralSampler,
    continuation_order,
    match_eigenvalues,
    track,
    loop_permutation,
    samples_frame,
)
from .branching import (
    BranchPoint,
    Cell,
    branch_points,
    end_permutation,
    exclusion_reach,
    initial_cells,
    near_exclusion,
    involution_residual,
    locate_zeros,
    merge_candidates,
    permutation_cycles,
    refine_zero,
    sheet_monodromy,
    winding,
)
from .genus import genus_estimate, ramification
from .multipliers import common_multipliers, eigenline, eigenline_multiplier, eigenvector
from .report import SpectralReport, curve_from_sampler, spectral_curve

__all__ = [
    "characteristic_polynomial",
    "strip_trivial",
    "trivial_order",
    "discriminant",
    "reconstruction_residual",
    "SpectralSample",
    "SpectralSampler",
    "continuation_order",
    "match_eigenvalues",
    "track",
    "loop_permutation",
    "samples_frame",
    "BranchPoint",
    "Cell",
    "branch_points",
    "end_permutation",
    "exclusion_reach",
    "initial_cells",
    "near_exclusion",
    "involution_residual",
    "locate_zeros",
    "merge_candidates",
    "permutation_cycles",
    "refine_zero",
    "sheet_monodromy",
    "winding",
    "genus_estimate",
    "ramification",
    "common_multipliers",
    "eigenline",
    "eigenline_multiplier",
    "eigenvector",
    "SpectralReport",
    "spectral_curve",
    "curve_from_sampler",
]
