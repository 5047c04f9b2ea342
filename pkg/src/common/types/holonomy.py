"""Holonomy and classification types."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


class CaseKind(str, Enum):
    """Holonomy case of a constrained Willmore torus."""

    I = "I"  # noqa: E741 - case names follow the standard trichotomy
    II = "II"
    IIIA = "IIIa"
    IIIB = "IIIb"
    UNDETERMINED = "Undetermined"


class MuEvidence(BaseModel):
    """Per-sample evidence behind a classification."""

    mu: tuple[float, float]
    label: CaseKind
    generator: str
    eigenvalues: list[tuple[float, float]]
    distinct_nontrivial: int
    unit_algebraic_multiplicity: int
    unit_geometric_multiplicity: int
    rank_h_minus_id: int
    rank_h_minus_id_squared: int
    common_unit_rank: int = Field(description="rank of [H1 - Id; H2 - Id]")


class CaseLabel(BaseModel):
    """Classification result with the evidence it was derived from."""

    schema_version: str = "1.0"
    label: CaseKind
    radius: float
    samples: int
    majority_fraction: float
    evidence: list[MuEvidence]
    note: Optional[str] = None

    @property
    def is_spectral(self) -> bool:
        """True for the cases that carry a nontrivial spectral curve."""
        return self.label in (CaseKind.I, CaseKind.II)


class HolonomyRecord(BaseModel):
    """One line of the holonomy sweep output."""

    mu: tuple[float, float]
    eigenvalues: list[tuple[float, float]]
    eigenvalues_gamma2: list[tuple[float, float]]
    det_drift: float
    commutator_norm: float
    error_estimate: float


class HolonomySweep(BaseModel):
    """Holonomy records for one circle of spectral parameters."""

    schema_version: str = "1.0"
    radius: float
    base_point: tuple[int, int]
    records: list[HolonomyRecord]
