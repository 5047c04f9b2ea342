"""Parallel transport, holonomy eigen-analysis and case classification."""

from .transport import (
    GENERATORS,
    TransportResult,
    transport,
    generator_loop,
    generator_holonomy,
    holonomy_pair,
    commutator_norm,
    base_coordinate,
    segment_samples,
)
from .eigen import (
    EigenStructure,
    eigen_structure,
    characteristic_roots,
    cluster_values,
    numerical_rank,
    sort_spectrum,
    spectrum_distance,
)
from .classifier import HolonomyClassifier, classify, circle_samples

__all__ = [
    "GENERATORS",
    "TransportResult",
    "transport",
    "generator_loop",
    "generator_holonomy",
    "holonomy_pair",
    "commutator_norm",
    "base_coordinate",
    "segment_samples",
    "EigenStructure",
    "eigen_structure",
    "characteristic_roots",
    "cluster_values",
    "numerical_rank",
    "sort_spectrum",
    "spectrum_distance",
    "HolonomyClassifier",
    "classify",
    "circle_samples",
]
