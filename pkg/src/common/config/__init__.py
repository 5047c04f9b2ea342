"""Configuration module for the holonomy toolkit."""

from .schemas import (
    RunConfig,
    SurfaceConfig,
    GridConfig,
    EtaConfig,
    SweepConfig,
    ToleranceConfig,
    TransportConfig,
    OutputConfig,
    LoggingConfig,
    parse_complex,
)
from .loader import ConfigLoader, flat_to_nested

__all__ = [
    "RunConfig",
    "SurfaceConfig",
    "GridConfig",
    "EtaConfig",
    "SweepConfig",
    "ToleranceConfig",
    "TransportConfig",
    "OutputConfig",
    "LoggingConfig",
    "parse_complex",
    "ConfigLoader",
    "flat_to_nested",
]
