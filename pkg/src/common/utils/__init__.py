"""Utilities module for the holonomy toolkit."""

from .deterministic import (
    DEFAULT_SEED,
    DeterministicManager,
    make_rng,
    ordered_map,
)

__all__ = [
    "DEFAULT_SEED",
    "DeterministicManager",
    "make_rng",
    "ordered_map",
]
