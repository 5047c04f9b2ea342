"""User-supplied multiplier grids."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from src.common.exceptions import EtaValidationError, InputFileError
from src.quatlin import algebra

from .base import BaseEtaPolicy, FormQuad
from ..hopf_fields import HopfGrid


class CustomEta(BaseEtaPolicy):
    """eta given pointwise as (n1, n2, 2, 2, 4) grids for both directions."""

    name = "custom"

    def __init__(self, eta_x: np.ndarray, eta_y: np.ndarray, source: str | None = None):
        self.eta_x = np.asarray(eta_x, dtype=float)
        self.eta_y = np.asarray(eta_y, dtype=float)
        if self.eta_x.shape != self.eta_y.shape or self.eta_x.shape[-3:] != (2, 2, 4):
            raise EtaValidationError("Custom eta grids must have shape (n1, n2, 2, 2, 4)", {"shape": self.eta_x.shape})
        if source:
            self.name = f"file:{source}"

    @classmethod
    def from_file(cls, path: str | Path) -> CustomEta:
        """Read {"dims": [n1, n2], "eta_x": [...], "eta_y": [...]} with 2x2x4 entries row-major."""
        path = Path(path)
        try:
            document = json.loads(path.read_text())
            n1, n2 = (int(d) for d in document["dims"])
            eta_x = np.asarray(document["eta_x"], dtype=float).reshape(n1, n2, 2, 2, 4)
            eta_y = np.asarray(document["eta_y"], dtype=float).reshape(n1, n2, 2, 2, 4)
        except (OSError, KeyError, TypeError, ValueError) as exc:
            raise InputFileError("Cannot read eta file", {"path": str(path), "error": str(exc)}) from exc
        return cls(eta_x, eta_y, source=str(path))

    def validate(self, hg: HopfGrid, tol: float) -> None:
        """im(eta) in L, L in ker(eta) and *eta = S eta = eta S."""
        fg = hg.frames
        if self.eta_x.shape[:2] != fg.shape:
            raise EtaValidationError("Custom eta grid does not match the frame grid", {"eta": self.eta_x.shape[:2], "grid": fg.shape})
        S = hg.sphere.S
        mask = fg.mask
        scale = max(1.0, float(np.max(algebra.qmat_norm(self.eta_x))))
        residuals = {
            "star_left": np.max(algebra.qmat_norm(self.eta_y - algebra.qmat_mul(S, self.eta_x))[mask]),
            "star_right": np.max(algebra.qmat_norm(self.eta_y - algebra.qmat_mul(self.eta_x, S))[mask]),
        }
        for name, eta in (("x", self.eta_x), ("y", self.eta_y)):
            # in the chart T^-1 eta T = [[0, 0], [c, 0]]
            chart = algebra.chart_conjugate(-fg.f, eta)
            off = np.sqrt(
                algebra.qnorm2(chart[..., 0, 0, :]) + algebra.qnorm2(chart[..., 0, 1, :]) + algebra.qnorm2(chart[..., 1, 1, :])
            )
            residuals[f"line_{name}"] = np.max(off[mask])
        worst = max(residuals, key=residuals.get)
        if residuals[worst] > tol * scale:
            raise EtaValidationError(
                "Custom eta violates the multiplier conditions",
                {"condition": worst, "residual": float(residuals[worst]), "tol": tol},
            )

    def modified_forms(self, hg: HopfGrid) -> FormQuad:
        return hg.A2x + self.eta_x, hg.A2y + self.eta_y, hg.Q2x + self.eta_x, hg.Q2y + self.eta_y
