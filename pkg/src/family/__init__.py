"""Associated family of flat connections, its dual and the gauge between them."""

from .muform import (
    MuForm,
    connection_form,
    dual_family,
    contragredient,
    constant_family,
    zero_family,
    jordan_family,
    fixture_family,
)
from .gauge import gauge_matrix
from .residuals import flatness_residual, plaquette_holonomies, symmetry_residual, j_conjugate, rk4_step

__all__ = [
    "MuForm",
    "connection_form",
    "dual_family",
    "contragredient",
    "constant_family",
    "zero_family",
    "jordan_family",
    "fixture_family",
    "gauge_matrix",
    "flatness_residual",
    "plaquette_holonomies",
    "symmetry_residual",
    "j_conjugate",
    "rk4_step",
]
