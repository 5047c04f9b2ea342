"""Quaternions, the module H^2 and its complexification C^4."""

from .types import (
    Quaternion,
    QVec2,
    QMat2,
    CVec4,
    CMat4,
    qmul,
    complexify,
    decomplexify,
    embed_qmat,
    apply_j,
)
from . import algebra

__all__ = [
    "Quaternion",
    "QVec2",
    "QMat2",
    "CVec4",
    "CMat4",
    "qmul",
    "complexify",
    "decomplexify",
    "embed_qmat",
    "apply_j",
    "algebra",
]
