"""Spectral curve report types."""

from typing import Optional

from pydantic import BaseModel, Field

from .holonomy import CaseKind


class BranchPointRecord(BaseModel):
    """Serialized branch point."""

    mu: tuple[float, float]
    permutation: Optional[list[int]] = Field(description="sheet map of a small loop; null when continuation stayed ambiguous")
    ramification: Optional[int] = Field(description="sum of (cycle length - 1)")
    winding: int


class SpectralSummary(BaseModel):
    """JSON side of a spectral report."""

    schema_version: str = "1.0"
    case: CaseKind
    sheets: int
    generator: str
    annulus: tuple[float, float]
    branch_points: list[BranchPointRecord]
    double_points: list[tuple[float, float]]
    genus_low: int
    genus_high: int
    end_permutations: dict[str, Optional[list[int]]]
    involution_residual: float
    flagged_samples: int
    note: Optional[str] = None

    @property
    def genus(self) -> Optional[int]:
        """Genus when pinned down, None for an interval."""
        return self.genus_low if self.genus_low == self.genus_high else None
