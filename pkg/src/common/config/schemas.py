"""Configuration schemas using Pydantic."""

from typing import Optional

import structlog
from pydantic import BaseModel, Field, field_validator, model_validator

logger = structlog.get_logger(__name__)


def parse_complex(text: str) -> complex:
    """Parse '0.5', '1+2i', '0.3-0.4j' or 're,im' into a complex number."""
    cleaned = text.strip().replace(" ", "")
    if "," in cleaned:
        re_part, im_part = cleaned.split(",", 1)
        return complex(float(re_part), float(im_part))
    return complex(cleaned.replace("i", "j"))


class SurfaceConfig(BaseModel):
    """Which torus to analyze."""

    source: str = Field(
        default="clifford",
        description="Builtin name, 'file:PATH' for a sampled surface, or 'fixture:zero|jordan'",
    )
    params: dict[str, float] = Field(default_factory=dict, description="Generator parameters")

    @property
    def is_file(self) -> bool:
        return self.source.startswith("file:")

    @property
    def is_fixture(self) -> bool:
        return self.source.startswith("fixture:")


class GridConfig(BaseModel):
    """Sampling grid over the fundamental domain."""

    n1: int = Field(default=64, ge=8)
    n2: int = Field(default=64, ge=8)
    base_point: tuple[int, int] = Field(default=(0, 0), description="Grid index of the base point")

    @model_validator(mode="after")
    def _warn_non_power_of_two(self) -> "GridConfig":
        for n in (self.n1, self.n2):
            if n & (n - 1):
                logger.warning("grid_dims_not_power_of_two", n1=self.n1, n2=self.n2)
                break
        return self


class EtaConfig(BaseModel):
    """Lagrange multiplier policy: zero, cmc:RHO, harmonic:left|right or file:PATH."""

    policy: str = "zero"
    ambient: str = Field(default="S3", description="Ambient space of cmc policies (S3 or R3)")

    @field_validator("policy")
    @classmethod
    def _check_policy(cls, value: str) -> str:
        head, _, tail = value.partition(":")
        if head == "zero" and not tail:
            return value
        if head == "cmc":
            float(tail)
            return value
        if head == "harmonic" and tail in ("left", "right"):
            return value
        if head == "file" and tail:
            return value
        raise ValueError(f"unknown eta policy {value!r}")

    @field_validator("ambient")
    @classmethod
    def _check_ambient(cls, value: str) -> str:
        value = value.upper()
        if value not in ("S3", "R3"):
            raise ValueError("ambient must be S3 or R3")
        return value


class SweepConfig(BaseModel):
    """Spectral parameter sampling."""

    r_min: float = Field(default=0.25, gt=0.0)
    r_max: float = Field(default=4.0, gt=0.0)
    circles: int = Field(default=8, ge=1)
    samples: int = Field(default=32, ge=8)
    classify_radius: float = Field(default=0.5, gt=0.0)
    classify_samples: int = Field(default=16, ge=8)
    exclusion_radius: float = Field(default=1e-2, gt=0.0)
    mu: str = Field(default="0.5", description="Spectral parameter for darboux/harmonic runs")
    eigen_index: int = Field(default=0, ge=0)

    @field_validator("mu")
    @classmethod
    def _check_mu(cls, value: str) -> str:
        if parse_complex(value) == 0:
            raise ValueError("mu must be nonzero")
        return value

    @model_validator(mode="after")
    def _check_annulus(self) -> "SweepConfig":
        if not self.r_min < self.r_max:
            raise ValueError("annulus needs r_min < r_max")
        if abs(self.classify_radius - 1.0) < self.exclusion_radius:
            raise ValueError("classification circle must avoid |mu| = 1")
        return self

    @property
    def mu_value(self) -> complex:
        return parse_complex(self.mu)


class ToleranceConfig(BaseModel):
    """Numerical tolerances; all strictly positive."""

    eig: float = Field(default=1e-6, gt=0.0, description="Relative eigenvalue clustering")
    rank: float = Field(default=1e-6, gt=0.0, description="Relative singular value cut-off")
    ode: float = Field(default=1e-8, gt=0.0, description="Transport Richardson error bound")
    conformal: float = Field(default=1e-6, gt=0.0)
    cmc: float = Field(default=1e-6, gt=0.0)
    eta: float = Field(default=1e-6, gt=0.0)
    flatness: float = Field(default=1e-3, gt=0.0)
    mask_fraction: float = Field(default=0.5, gt=0.0, le=1.0)


class TransportConfig(BaseModel):
    """RK4 transport settings."""

    steps: int = Field(default=512, ge=8)
    max_refinements: int = Field(default=3, ge=0)


class OutputConfig(BaseModel):
    """Where reports go."""

    out_dir: Optional[str] = Field(default=None, description="Directory for reports; stdout if unset")


class LoggingConfig(BaseModel):
    """Configuration for logging."""

    level: str = Field(default="INFO", description="Log level")
    format: str = Field(default="json", description="Log format (json or console)")
    output: str = Field(default="stderr", description="Output destination")


class RunConfig(BaseModel):
    """Complete configuration of one CLI run."""

    name: str = "cw_holonomy"
    version: str = "1.0.0"
    surface: SurfaceConfig = Field(default_factory=SurfaceConfig)
    grid: GridConfig = Field(default_factory=GridConfig)
    eta: EtaConfig = Field(default_factory=EtaConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    tolerances: ToleranceConfig = Field(default_factory=ToleranceConfig)
    transport: TransportConfig = Field(default_factory=TransportConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    workers: int = Field(default=1, ge=1)
    seed: int = 20240607
