"""1-forms on the sampled torus stored as (x, y) component arrays."""

import numpy as np

from .lattice import TorusLattice


def star(form_x: np.ndarray, form_y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Hodge star for J d/dx = d/dy: (*w)(d/dx) = w(d/dy), (*w)(d/dy) = -w(d/dx)."""
    return form_y, -form_x


def plaquette_curl(form_x: np.ndarray, form_y: np.ndarray, lattice: TorusLattice) -> np.ndarray:
    """dw / (dx ^ dy) per grid cell from trapezoid circulations.

    Axes 0 and 1 are the (s, t) grid; trailing axes are carried along. The
    value for cell (a, b) is the circulation around [a, a+1] x [b, b+1]
    divided by the oriented cell area.
    """
    n1, n2 = form_x.shape[:2]
    (b11, b12), (b21, b22) = lattice.basis
    form_s = b11 * form_x + b12 * form_y
    form_t = b21 * form_x + b22 * form_y

    def up(a: np.ndarray, axis: int) -> np.ndarray:
        return np.roll(a, -1, axis=axis)

    bottom = 0.5 * (form_s + up(form_s, 0)) / n1
    right = 0.5 * (up(form_t, 0) + up(up(form_t, 0), 1)) / n2
    top = 0.5 * (up(form_s, 1) + up(up(form_s, 0), 1)) / n1
    left = 0.5 * (form_t + up(form_t, 1)) / n2
    circulation = bottom + right - top - left
    return circulation / (lattice.cross / (n1 * n2))
