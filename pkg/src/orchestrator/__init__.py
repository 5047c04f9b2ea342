"""Orchestration of the analysis pipeline and the command-line surface."""

from .interfaces import Analyzer, CommandResult
from .pipeline_manager import PipelineManager, write_json
from .cli import app, main, run_command, flags_to_overrides, load_config

__all__ = [
    # Interfaces
    "Analyzer",
    "CommandResult",
    # Pipeline
    "PipelineManager",
    "write_json",
    # CLI
    "app",
    "main",
    "run_command",
    "flags_to_overrides",
    "load_config",
]
