"""Pipeline types."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel


class PipelineStep(str, Enum):
    """Enumeration of analysis pipeline steps."""

    SURFACE = "surface"
    FRAMES = "frames"
    SPHERE = "sphere"
    HOPF = "hopf"
    MULTIPLIER = "multiplier"
    FAMILY = "family"


class StepTiming(BaseModel):
    """Wall time of one pipeline step."""

    step: PipelineStep
    seconds: float


class PipelineState(BaseModel):
    """Progress of an analysis pipeline."""

    completed_steps: list[PipelineStep] = []
    timings: list[StepTiming] = []
    error: Optional[str] = None
