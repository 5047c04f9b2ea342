"""Analysis and Darboux report types."""

from typing import Optional

from pydantic import BaseModel, Field


class AnalysisReport(BaseModel):
    """Summary of one surface analysis."""

    schema_version: str = "1.0"
    surface: str
    dims: tuple[int, int]
    lattice: dict[str, tuple[float, float]]
    eta_policy: str
    willmore_energy: float
    willmore_energy_dual: float
    umbilic_energy: float = Field(description="integral of |trace-free second fundamental form|^2, 2W")
    deg_perp: int
    deg_perp_from_energy: float
    degree_consistent: bool
    el_residual: float
    conf_residual: float
    masked_points: int
    sphere_mean_curvature: Optional[float] = None
    sphere_mean_curvature_drift: Optional[float] = None
    energy_below_8pi: bool
    expected_case: Optional[str] = None


class DarbouxQualityReport(BaseModel):
    """Quality of a Darboux transform."""

    schema_version: str = "1.0"
    mu: tuple[float, float]
    multipliers: tuple[tuple[float, float], tuple[float, float]]
    degenerate: bool
    constant_value: Optional[tuple[float, float, float, float]] = None
    conformality_residual: Optional[float] = None
    willmore_energy: Optional[float] = None
    energy_quantum_ratio: Optional[float] = Field(
        default=None, description="W / 4pi, reported for eta = 0 inputs"
    )
    mask_fraction: float
    masked_points: int
    monodromy_defect: float
    cell_residual: float
