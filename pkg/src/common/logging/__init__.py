"""Logging module for the holonomy toolkit."""

from .setup import setup_logging, get_logger, bind_run_context

__all__ = ["setup_logging", "get_logger", "bind_run_context"]
