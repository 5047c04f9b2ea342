"""Sampled-surface JSON documents.

Schema: {"lattice": {"tau1": [re, im], "tau2": [re, im]}, "dims": [n1, n2],
"f": [[w, x, y, z], ...]} with f in row-major (s, t) order.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from src.common.exceptions import InputFileError, SurfaceError
from src.common.logging import get_logger

from .generators import SampledSurface
from .lattice import TorusLattice

logger = get_logger(__name__)


def surface_document(lattice: TorusLattice, values: np.ndarray) -> dict:
    values = np.asarray(values, dtype=float)
    n1, n2 = values.shape[:2]
    return {
        "lattice": {k: list(v) for k, v in lattice.as_dict().items()},
        "dims": [int(n1), int(n2)],
        "f": values.reshape(n1 * n2, 4).tolist(),
    }


def write_surface(path: str | Path, lattice: TorusLattice, values: np.ndarray) -> Path:
    """Write grid values as a sampled-surface document."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(surface_document(lattice, values), sort_keys=True))
    logger.info("surface_written", path=str(path), dims=list(np.shape(values)[:2]))
    return path


def parse_surface(document: dict, source: str | None = None) -> SampledSurface:
    try:
        tau1 = complex(*document["lattice"]["tau1"])
        tau2 = complex(*document["lattice"]["tau2"])
        n1, n2 = (int(d) for d in document["dims"])
        values = np.asarray(document["f"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFileError("Malformed sampled-surface document", {"source": source, "error": str(exc)}) from exc
    if values.shape != (n1 * n2, 4):
        raise InputFileError(
            "Sampled values do not match dims",
            {"source": source, "expected": n1 * n2, "shape": values.shape},
        )
    try:
        lattice = TorusLattice(tau1, tau2)
    except SurfaceError as exc:
        raise InputFileError(exc.message, {"source": source, **exc.details}) from exc
    return SampledSurface(lattice, values.reshape(n1, n2, 4), source=source)


def read_surface(path: str | Path) -> SampledSurface:
    """Read a sampled-surface document."""
    path = Path(path)
    try:
        document = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputFileError("Cannot read surface file", {"path": str(path), "error": str(exc)}) from exc
    return parse_surface(document, source=str(path))
