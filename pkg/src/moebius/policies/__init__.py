"""Lagrange multiplier policies."""

from .base import BaseEtaPolicy
from .zero import ZeroEta
from .cmc import CmcRho
from .harmonic_normal import HarmonicNormal
from .custom import CustomEta

__all__ = ["BaseEtaPolicy", "ZeroEta", "CmcRho", "HarmonicNormal", "CustomEta"]
