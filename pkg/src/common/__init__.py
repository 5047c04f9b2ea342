"""Common infrastructure module for the holonomy toolkit.

This module provides shared types, configuration, logging, exceptions and
determinism helpers that all numerical modules depend on.
"""

from . import exceptions
from . import types
from . import config
from . import logging
from . import utils

__all__ = [
    "types",
    "config",
    "logging",
    "exceptions",
    "utils",
]
