"""Gauge between the primal and dual associated families."""

import numpy as np

from src.common.exceptions import GaugeSingularError
from src.moebius import SphereCongruenceGrid

MAX_CONDITION = 1e12


def gauge_matrix(sg: SphereCongruenceGrid, mu: complex) -> np.ndarray:
    """G(mu) = (mu + 1) Id - i (mu - 1) S per point, shape (n1, n2, 4, 4).

    Since S^2 = -Id the eigenvalues of G are 2 and 2 mu, so G only
    degenerates at mu = 0 or where S is badly conditioned.
    """
    mu = complex(mu)
    S = sg.embedded()
    G = (mu + 1.0) * np.eye(4) - 1j * (mu - 1.0) * S
    cond = np.linalg.cond(G[sg.mask])
    worst = float(np.max(cond)) if cond.size else np.inf
    if mu == 0 or not np.isfinite(worst) or worst > MAX_CONDITION:
        raise GaugeSingularError("Gauge matrix is singular", {"mu": str(mu), "condition": worst})
    return G
