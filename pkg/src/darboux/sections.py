"""nabla^mu-parallel section fields on the grid, built by spanning-tree transport."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from src.common.config import ToleranceConfig, TransportConfig
from src.common.exceptions import TransportError
from src.common.logging import get_logger
from src.family import MuForm, rk4_step
from src.quatlin import algebra
from src.spectral import eigenline
from src.surface import FrameGrid
from src.surface.spectral_ops import resample_axis

logger = get_logger(__name__)

Tree = Literal["x-first", "y-first"]

MIXING = (np.sqrt(5.0) - 1.0) / 2.0 + 0.25j


@dataclass(frozen=True)
class ParallelSection:
    """Grid field psi (n1, n2, d) with psi(p + tau_k) = psi(p) h_k up to monodromy_defect."""

    psi: np.ndarray
    mu: complex
    multipliers: tuple[complex, complex]
    cell_residual: float
    monodromy_defect: float
    base_point: tuple[int, int]
    family: MuForm = field(repr=False)

    @property
    def shape(self) -> tuple[int, int]:
        return self.psi.shape[:2]

    @property
    def mask(self) -> np.ndarray:
        return self.family.mask


def edge_transports(mf: MuForm, mu: complex, substeps: int = 2) -> tuple[np.ndarray, np.ndarray]:
    """Transport matrices (i, j) -> (i+1, j) and (i, j) -> (i, j+1), each of shape (n1, n2, d, d).

    Omega between grid points comes from trigonometric interpolation; each
    edge takes `substeps` RK4 steps.
    """
    n1, n2 = mf.shape
    out = []
    for axis, (n, step) in enumerate(((n1, mf.lattice.tau1 / n1), (n2, mf.lattice.tau2 / n2))):
        w = mf.along(mu, step) / substeps
        nodes = [resample_axis(w, n, axis=axis, shift=q / (2 * substeps)) for q in range(2 * substeps)]
        nodes.append(np.roll(w, -1, axis=axis))
        T = np.broadcast_to(np.eye(mf.dim, dtype=complex), w.shape).copy()
        for k in range(substeps):
            T = rk4_step(T, nodes[2 * k], nodes[2 * k + 1], nodes[2 * k + 2])
        out.append(T)
    return out[0], out[1]


def _line_product(T: np.ndarray, start: int, count: int, axis_len: int) -> np.ndarray:
    """Product of `count` consecutive edge transports along one grid line beginning at `start`."""
    d = T.shape[-1]
    H = np.eye(d, dtype=complex)
    for k in range(count):
        H = T[(start + k) % axis_len] @ H
    return H


def grid_holonomies(mf: MuForm, mu: complex, base_point: tuple[int, int] = (0, 0), substeps: int = 2) -> tuple[np.ndarray, np.ndarray]:
    """Holonomies of the discrete edge transports along the grid lines through the base point."""
    i0, j0 = mf.base_index(base_point)
    n1, n2 = mf.shape
    T1, T2 = edge_transports(mf, mu, substeps)
    return _line_product(T1[:, j0], i0, n1, n1), _line_product(T2[i0, :], j0, n2, n2)


def refine_seed(H: np.ndarray, seed: np.ndarray, shift: float = 1e-10) -> tuple[np.ndarray, complex]:
    """One inverse-iteration step of seed against H; returns the unit vector and its Rayleigh quotient."""
    value = complex(np.vdot(seed, H @ seed) / np.vdot(seed, seed))
    d = H.shape[-1]
    try:
        v = np.linalg.solve(H - (value + shift) * np.eye(d), seed)
    except np.linalg.LinAlgError:
        v = seed
    if not np.all(np.isfinite(v)) or np.linalg.norm(v) == 0:
        v = seed
    v = v / np.linalg.norm(v)
    return v, complex(np.vdot(v, H @ v))


def parallel_section(
    mf: MuForm,
    mu: complex,
    seed: np.ndarray,
    base_point: tuple[int, int] = (0, 0),
    substeps: int = 2,
    tree: Tree = "x-first",
    tol: Optional[float] = None,
    refine: bool = False,
) -> ParallelSection:
    """Transport seed over a spanning tree of the grid.

    x-first runs along the base row and then up every column; y-first the
    other way round. The cell residual is the largest defect on the edges
    left out of the tree, relative to max |psi|.

    Raises:
        TransportError: If tol is given and the cell residual exceeds it.
    """
    mu = complex(mu)
    i0, j0 = mf.base_index(base_point)
    n1, n2 = mf.shape
    T1, T2 = edge_transports(mf, mu, substeps)
    seed = np.asarray(seed, dtype=complex)
    if refine:
        H1 = _line_product(T1[:, j0], i0, n1, n1)
        H2 = _line_product(T2[i0, :], j0, n2, n2)
        # a common eigenvector of H1, H2 is one of H1 + c H2 with separated eigenvalues
        seed, _ = refine_seed(H1 + MIXING * H2, seed)
    psi = np.zeros((n1, n2, mf.dim), dtype=complex)
    psi[i0, j0] = seed
    if tree == "x-first":
        for k in range(1, n1):
            i = (i0 + k) % n1
            psi[i, j0] = T1[(i - 1) % n1, j0] @ psi[(i - 1) % n1, j0]
        for k in range(1, n2):
            j = (j0 + k) % n2
            psi[:, j] = np.einsum("iab,ib->ia", T2[:, (j - 1) % n2], psi[:, (j - 1) % n2])
    else:
        for k in range(1, n2):
            j = (j0 + k) % n2
            psi[i0, j] = T2[i0, (j - 1) % n2] @ psi[i0, (j - 1) % n2]
        for k in range(1, n1):
            i = (i0 + k) % n1
            psi[i] = np.einsum("jab,jb->ja", T1[(i - 1) % n1], psi[(i - 1) % n1])

    scale = float(np.max(np.linalg.norm(psi, axis=-1)))
    # continuation of every grid line across the seam: psi(p + tau) vs psi(p) h
    across1 = np.einsum("jab,jb->ja", T1[(i0 - 1) % n1], psi[(i0 - 1) % n1])
    across2 = np.einsum("iab,ib->ia", T2[:, (j0 - 1) % n2], psi[:, (j0 - 1) % n2])
    h1 = complex(np.vdot(psi[i0, j0], across1[j0]) / np.vdot(psi[i0, j0], psi[i0, j0]))
    h2 = complex(np.vdot(psi[i0, j0], across2[i0]) / np.vdot(psi[i0, j0], psi[i0, j0]))
    defect = max(
        float(np.max(np.linalg.norm(across1 - h1 * psi[i0], axis=-1))),
        float(np.max(np.linalg.norm(across2 - h2 * psi[:, j0], axis=-1))),
    ) / scale

    # edges not crossing a seam; tree edges give zero
    pred1 = np.einsum("ijab,ijb->ija", T1, psi)
    pred2 = np.einsum("ijab,ijb->ija", T2, psi)
    gap1 = np.linalg.norm(np.roll(psi, -1, axis=0) - pred1, axis=-1)
    gap2 = np.linalg.norm(np.roll(psi, -1, axis=1) - pred2, axis=-1)
    gap1[(i0 - 1) % n1, :] = 0.0
    gap2[:, (j0 - 1) % n2] = 0.0
    residual = float(max(gap1.max(), gap2.max()) / scale)

    logger.debug("parallel_section_built", mu=str(mu), tree=tree, cell_residual=residual, monodromy_defect=defect)
    if tol is not None and residual > tol:
        raise TransportError(
            "Section is not consistent around grid cells; refine the grid or check flatness",
            {"cell_residual": residual, "tol": tol},
        )
    return ParallelSection(
        psi=psi,
        mu=mu,
        multipliers=(h1, h2),
        cell_residual=residual,
        monodromy_defect=defect,
        base_point=(i0, j0),
        family=mf,
    )


def trivial_seeds(mf: MuForm, mu: complex, base_point: tuple[int, int] = (0, 0), tol: float = 1e-6, substeps: int = 2) -> np.ndarray:
    """Orthonormal basis (as columns) of the common eigenspace of eigenvalue 1 of both grid holonomies."""
    H1, H2 = grid_holonomies(mf, mu, base_point, substeps)
    d = mf.dim
    stacked = np.vstack([H1 - np.eye(d), H2 - np.eye(d)])
    _, s, vh = np.linalg.svd(stacked)
    scale = max(1.0, float(s[0]))
    null = vh[s < np.sqrt(tol) * scale]
    return np.conj(null).T


def line_projection(f: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """Image of psi in V/L: a - f b for psi = (a, b), as complex pairs (..., 2)."""
    return psi[..., :2] - np.einsum("...ab,...b->...a", algebra.quat_block(f), psi[..., 2:])


def _edge_midpoints(values: np.ndarray, axis: int) -> np.ndarray:
    return resample_axis(values, values.shape[axis], axis=axis, shift=0.5)


def prolongation_residual(ps: ParallelSection, fg: FrameGrid) -> float:
    """Largest V/L component of d psi relative to |d psi|, from midpoint differences on grid edges.

    Only edges inside the fundamental domain are used since psi has
    monodromy. Zero when d psi vanishes.
    """
    psi = ps.psi
    n1, n2 = ps.shape
    i0, j0 = ps.base_point
    worst = 0.0
    top = 0.0
    for axis in (0, 1):
        diff = np.roll(psi, -1, axis=axis) - psi
        f_mid = _edge_midpoints(fg.f, axis)
        transverse = np.linalg.norm(line_projection(f_mid, diff), axis=-1)
        size = np.linalg.norm(diff, axis=-1)
        seam = np.ones((n1, n2), dtype=bool)
        if axis == 0:
            seam[(i0 - 1) % n1, :] = False
        else:
            seam[:, (j0 - 1) % n2] = False
        valid = seam & fg.mask & np.roll(fg.mask, -1, axis=axis)
        if valid.any():
            top = max(top, float(np.max(size[valid])))
            worst = max(worst, float(np.max(transverse[valid])))
    if top < 1e-14:
        return 0.0
    return worst / top


def eigen_section(
    mf: MuForm,
    mu: complex,
    index: int = 0,
    base_point: tuple[int, int] = (0, 0),
    substeps: int = 2,
    tree: Tree = "x-first",
    tolerances: Optional[ToleranceConfig] = None,
    transport_settings: Optional[TransportConfig] = None,
) -> ParallelSection:
    """Parallel section through the selected holonomy eigenline.

    The eigenvector from the generator holonomies is re-orthogonalized by one
    inverse-iteration step against the grid holonomies before transport.
    """
    v, _, _ = eigenline(mf, mu, index, base_point, tolerances, transport_settings)
    refine = complex(mu) != 1
    return parallel_section(mf, mu, v, base_point, substeps=substeps, tree=tree, refine=refine)


def asymptotic_residual(ps: ParallelSection, mf: Optional[MuForm] = None) -> float:
    """RMS over unmasked points and both directions of |(A_o psi)^(1,0)| / |A_o psi|.

    The (1,0) part of A_o psi is P psi; points where A_o psi vanishes are skipped.
    """
    mf = mf or ps.family
    num, den = [], []
    for P, M in ((mf.Px, mf.Mx), (mf.Py, mf.My)):
        p = np.einsum("ijab,ijb->ija", P, ps.psi)
        a = p + np.einsum("ijab,ijb->ija", M, ps.psi)
        num.append(np.linalg.norm(p, axis=-1)[mf.mask])
        den.append(np.linalg.norm(a, axis=-1)[mf.mask])
    num, den = np.concatenate(num), np.concatenate(den)
    scale = max(float(den.max()), 1e-300)
    keep = den > 1e-10 * scale
    if not keep.any():
        return 0.0
    return float(np.sqrt(np.mean((num[keep] / den[keep]) ** 2)))
