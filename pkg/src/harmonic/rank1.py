"""Rank-1 Willmore connections of harmonic maps N: T^2 -> S^2 and their 2x2 associated family."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from src.common.config import SweepConfig, ToleranceConfig, TransportConfig
from src.common.exceptions import HarmonicError
from src.common.logging import get_logger
from src.common.types import CaseKind
from src.common.utils import ordered_map
from src.family import MuForm
from src.holonomy import commutator_norm, holonomy_pair
from src.quatlin import algebra
from src.spectral import SpectralReport, curve_from_sampler
from src.spectral.sampling import SpectralSampler, continuation_order
from src.surface import TorusLattice

from .normals import HarmonicMapGrid, harmonic_map_grid, harmonicity_residual

logger = get_logger(__name__)


@dataclass(frozen=True)
class Rank1Family:
    """The 2x2 family d + (mu - 1) P2 + (mu^-1 - 1) M2 on the trivial line bundle with J psi = psi N."""

    family: MuForm
    normal: HarmonicMapGrid

    @property
    def lattice(self) -> TorusLattice:
        return self.family.lattice

    @property
    def shape(self) -> tuple[int, int]:
        return self.family.shape

    def evaluate(self, mu: complex) -> tuple[np.ndarray, np.ndarray]:
        return self.family.evaluate(mu)


def willmore_form(normal: HarmonicMapGrid) -> tuple[np.ndarray, np.ndarray]:
    """A = N dN' / 2, acting on H by left multiplication."""
    px, py = normal.prime_form()
    return 0.5 * algebra.hamilton(normal.N, px), 0.5 * algebra.hamilton(normal.N, py)


def rank1_family(
    normal: HarmonicMapGrid | np.ndarray,
    lattice: Optional[TorusLattice] = None,
    tol: float = 1e-6,
    offset: tuple[float, float] = (0.0, 0.0),
) -> Rank1Family:
    """Complexified rank-1 family of a harmonic normal.

    P2 = (1 - iE(N)) E(A) / 2 and M2 = (1 + iE(N)) E(A) / 2 with E the 2x2
    matrix of left multiplication; Omega2(1) = 0.

    Raises:
        HarmonicError: If N is not harmonic within tol.
    """
    if not isinstance(normal, HarmonicMapGrid):
        if lattice is None:
            raise HarmonicError("A lattice is required to differentiate a raw normal field")
        normal = harmonic_map_grid(normal, lattice)
    residual = harmonicity_residual(normal.N, normal.lattice, method="spectral")
    if residual > tol:
        raise HarmonicError("Normal field is not harmonic", {"residual": residual, "tol": tol})

    EN = algebra.quat_block(normal.N)
    eye = np.eye(2)
    plus, minus = 0.5 * (eye - 1j * EN), 0.5 * (eye + 1j * EN)
    ax, ay = willmore_form(normal)
    ex, ey = algebra.quat_block(ax), algebra.quat_block(ay)
    mf = MuForm(
        Px=plus @ ex,
        Py=plus @ ey,
        Mx=minus @ ex,
        My=minus @ ey,
        lattice=normal.lattice,
        mask=np.ones(normal.N.shape[:2], dtype=bool),
        offset=offset,
        kind="rank1",
    )
    logger.debug("rank1_family_built", harmonicity=residual, typing_residual=mf.typing_residual())
    return Rank1Family(family=mf, normal=normal)


def rank1_holonomy(
    rf: Rank1Family,
    mu: complex,
    base_point: tuple[int, int] = (0, 0),
    tolerances: Optional[ToleranceConfig] = None,
    transport_settings: Optional[TransportConfig] = None,
) -> tuple[np.ndarray, np.ndarray]:
    """(H(gamma1), H(gamma2)) of the 2x2 family; SL(2) and commutator defects are logged."""
    tolerances = tolerances or ToleranceConfig()
    transport_settings = transport_settings or TransportConfig()
    h1, h2 = holonomy_pair(
        rf.family,
        mu,
        base_point,
        steps=transport_settings.steps,
        tol=tolerances.ode,
        max_refinements=transport_settings.max_refinements,
    )
    det_drift = max(h1.det_drift, h2.det_drift)
    commutator = commutator_norm(h1.H, h2.H)
    level = "warning" if max(det_drift, commutator) > np.sqrt(tolerances.ode) else "debug"
    getattr(logger, level)("rank1_holonomy", mu=str(complex(mu)), det_drift=det_drift, commutator=commutator)
    return h1.H, h2.H


def harmonic_spectral(
    rf: Rank1Family,
    sweep: Optional[SweepConfig] = None,
    tolerances: Optional[ToleranceConfig] = None,
    transport_settings: Optional[TransportConfig] = None,
    workers: int = 1,
    levels: int = 4,
    conformal_tol: float = 1e-8,
) -> SpectralReport:
    """Two-sheeted spectral curve of the rank-1 family.

    0 and infinity are branch points, so the genus is half the number of
    branch points found in the annulus.

    Raises:
        HarmonicError: If N is conformal, where A or Q vanishes and no curve exists.
    """
    if rf.normal.is_conformal(conformal_tol):
        raise HarmonicError("spectral curve undefined for a conformal normal", {"tol": conformal_tol})
    sampler = SpectralSampler(
        rf.family,
        CaseKind.II,
        tolerances=tolerances or ToleranceConfig(),
        transport_settings=transport_settings or TransportConfig(),
        workers=workers,
        trivial=0,
    )
    return curve_from_sampler(sampler, sweep or SweepConfig(), levels=levels, case=CaseKind.II)


def compare_holonomies(
    mf: MuForm,
    rf: Rank1Family,
    mus: Sequence[complex],
    generator: str = "g1",
    tolerances: Optional[ToleranceConfig] = None,
    transport_settings: Optional[TransportConfig] = None,
    workers: int = 1,
) -> pd.DataFrame:
    """Pair the Case II stripped eigenvalues of the 4x4 family with the 2x2 eigenvalues at each mu.

    One row per mu and sheet with columns mu_re, mu_im, sheet, rank1_re,
    rank1_im, stripped_re, stripped_im and abs_diff.
    """
    settings = dict(
        generator=generator,
        tolerances=tolerances or ToleranceConfig(),
        transport_settings=transport_settings or TransportConfig(),
    )
    full = SpectralSampler(mf, CaseKind.II, **settings)
    small = SpectralSampler(rf.family, CaseKind.II, trivial=0, **settings)

    def pair(mu: complex) -> list[dict]:
        a = small.sample(mu).eigenvalues
        b = full.sample(mu).eigenvalues
        b = b[continuation_order(a, b)]
        return [
            {
                "mu_re": complex(mu).real,
                "mu_im": complex(mu).imag,
                "sheet": k,
                "rank1_re": a[k].real,
                "rank1_im": a[k].imag,
                "stripped_re": b[k].real,
                "stripped_im": b[k].imag,
                "abs_diff": abs(a[k] - b[k]),
            }
            for k in range(len(a))
        ]

    rows = [row for block in ordered_map(pair, list(mus), workers) for row in block]
    frame = pd.DataFrame(rows)
    logger.info("holonomies_compared", samples=len(mus), max_diff=float(frame["abs_diff"].max()) if rows else 0.0)
    return frame
