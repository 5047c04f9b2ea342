"""Orchestrator interfaces."""

from pathlib import Path
from typing import Any, Optional, Protocol

from src.common.config import RunConfig
from src.common.types import PipelineState


class CommandResult:
    """Outcome of one CLI command."""

    def __init__(
        self,
        command: str,
        payload: Optional[dict[str, Any]] = None,
        files: Optional[list[Path]] = None,
        exit_code: int = 0,
        state: Optional[PipelineState] = None,
    ):
        self.command = command
        self.payload = payload or {}
        self.files = files or []
        self.exit_code = exit_code
        self.state = state

    @property
    def success(self) -> bool:
        return self.exit_code == 0


class Analyzer(Protocol):
    """Protocol of the object the CLI drives."""

    config: RunConfig

    def analyze(self) -> Any:
        """Surface analysis report."""
        ...

    def classify(self) -> Any:
        """Holonomy case label with evidence."""
        ...

    def get_state(self) -> PipelineState:
        """Steps completed so far."""
        ...
