"""Mean curvature sphere, Hopf fields, Lagrange multipliers and the Willmore energy."""

from .sphere import SphereCongruenceGrid, mean_curvature_sphere, chart_form
from .hopf_fields import HopfGrid, hopf_fields
from .policies import BaseEtaPolicy, ZeroEta, CmcRho, HarmonicNormal, CustomEta
from .eta import CircleGrid, apply_eta, parse_policy
from .energy import (
    hopf_energy,
    willmore_energy,
    willmore_energy_dual,
    degree_from_energies,
    normal_degree,
)
from .residuals import el_residual

__all__ = [
    "SphereCongruenceGrid",
    "mean_curvature_sphere",
    "chart_form",
    "HopfGrid",
    "hopf_fields",
    "BaseEtaPolicy",
    "ZeroEta",
    "CmcRho",
    "HarmonicNormal",
    "CustomEta",
    "CircleGrid",
    "apply_eta",
    "parse_policy",
    "hopf_energy",
    "willmore_energy",
    "willmore_energy_dual",
    "degree_from_energies",
    "normal_degree",
    "el_residual",
]
