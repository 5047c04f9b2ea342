"""Darboux transforms f# = a b^-1 from parallel sections psi = (a, b)."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from src.common.exceptions import CwHolonomyError, DarbouxError
from src.common.logging import get_logger
from src.common.types import DarbouxQualityReport
from src.moebius import hopf_fields, mean_curvature_sphere, normal_degree, willmore_energy
from src.quatlin import algebra
from src.surface import FrameGrid, SampledSurface, conformality_residual, sample_frames, write_surface
from src.surface.spectral_ops import lattice_gradient

from .sections import ParallelSection, line_projection

logger = get_logger(__name__)

CONSTANT_TOL = 1e-8


@dataclass(frozen=True)
class DarbouxMap:
    """Transformed immersion on the grid of the section.

    ``fsharp`` holds a b^-1 where ``mask`` is True and zeros elsewhere.
    ``line_residual`` is the largest deviation of the projector onto psi H
    from its value at the base point; a constant transform has residual ~0
    and ``constant_value`` is its point, or None for the point at infinity.
    """

    fsharp: np.ndarray
    mask: np.ndarray
    conformality: np.ndarray
    line_residual: float
    degenerate: bool
    constant_value: Optional[np.ndarray]
    section: ParallelSection = field(repr=False)

    @property
    def mask_fraction(self) -> float:
        """Fraction of masked points."""
        return float(1.0 - self.mask.mean())

    @property
    def masked_points(self) -> int:
        return int((~self.mask).sum())


def line_projectors(psi: np.ndarray) -> np.ndarray:
    """Orthogonal projector of C^4 onto the quaternionic line psi H = span(psi, psi j)."""
    psi_j = algebra.apply_j(psi)
    norm2 = np.sum(np.abs(psi) ** 2, axis=-1)[..., None, None]
    outer = np.einsum("...a,...b->...ab", psi, np.conj(psi)) + np.einsum("...a,...b->...ab", psi_j, np.conj(psi_j))
    return outer / np.where(norm2 > 0, norm2, 1.0)


def darboux_transform(
    ps: ParallelSection,
    fg: FrameGrid,
    threshold: float = 1e-6,
    max_mask: float = 0.5,
) -> DarbouxMap:
    """Read the line psi H in the affine chart.

    Points are masked where |b| < threshold |psi| (f# through infinity) or
    where psi lies in L up to the same relative tolerance (singular points).
    A constant line is reported as degenerate before masking is considered.

    Raises:
        DarbouxError: If a non-constant transform is masked on more than max_mask of the grid.
    """
    psi = ps.psi
    size = np.linalg.norm(psi, axis=-1)
    v = algebra.decomplexify(psi)
    a, b = v[..., 0, :], v[..., 1, :]

    projectors = line_projectors(psi)
    i0, j0 = ps.base_point
    line_residual = float(np.max(np.linalg.norm(projectors - projectors[i0, j0], axis=(-2, -1))[fg.mask]))
    degenerate = line_residual < CONSTANT_TOL

    b_size = algebra.qnorm(b)
    transverse = np.linalg.norm(line_projection(fg.f, psi), axis=-1)
    mask = fg.mask & (b_size > threshold * size) & (transverse > threshold * size)
    safe_b = np.where(mask[..., None], b, algebra.ONE)
    fsharp = np.where(mask[..., None], algebra.hamilton(a, algebra.qinv(safe_b)), 0.0)

    constant_value = None
    if degenerate:
        if b_size[i0, j0] > threshold * size[i0, j0]:
            constant_value = algebra.hamilton(a[i0, j0], algebra.qinv(b[i0, j0]))
        logger.info(
            "constant_darboux_transform",
            mu=str(ps.mu),
            at_infinity=constant_value is None,
            line_residual=line_residual,
        )
    else:
        fraction = float(1.0 - mask.mean())
        if fraction > max_mask:
            raise DarbouxError(
                "Darboux transform is masked on most of the grid",
                {"mask_fraction": fraction, "max_mask": max_mask, "mu": str(ps.mu)},
            )

    fx, fy = lattice_gradient(fsharp, fg.lattice)
    conformality = np.where(mask, conformality_residual(fx, fy), np.nan)
    if degenerate:
        conformality = np.full(mask.shape, np.nan)

    logger.debug("darboux_transform_built", mu=str(ps.mu), degenerate=degenerate, masked=int((~mask).sum()))
    return DarbouxMap(
        fsharp=fsharp,
        mask=mask,
        conformality=conformality,
        line_residual=line_residual,
        degenerate=degenerate,
        constant_value=constant_value,
        section=ps,
    )


def _transform_energy(dm: DarbouxMap) -> Optional[float]:
    """Willmore energy of f# when it is immersed on the whole grid."""
    if dm.degenerate or not dm.mask.all():
        return None
    lattice = dm.section.family.lattice
    try:
        frames = sample_frames(SampledSurface(lattice, dm.fsharp, source="darboux"), *dm.mask.shape, conformal_tol=np.inf)
        hg = hopf_fields(frames, mean_curvature_sphere(frames))
        return float(willmore_energy(hg, normal_degree(frames)))
    except CwHolonomyError as exc:
        logger.warning("transform_energy_unavailable", error=str(exc))
        return None


def transform_quality(dm: DarbouxMap, eta_zero: bool = False) -> DarbouxQualityReport:
    """Quality report of a Darboux transform; W / 4 pi is included for eta = 0 inputs."""
    ps = dm.section
    energy = _transform_energy(dm)
    conformality = None
    if not dm.degenerate:
        conformality = float(np.nanmax(dm.conformality))
    constant = None
    if dm.constant_value is not None:
        constant = tuple(float(x) for x in dm.constant_value)
    ratio = energy / (4.0 * np.pi) if (eta_zero and energy is not None) else None
    report = DarbouxQualityReport(
        mu=(ps.mu.real, ps.mu.imag),
        multipliers=tuple((h.real, h.imag) for h in ps.multipliers),
        degenerate=dm.degenerate,
        constant_value=constant,
        conformality_residual=conformality,
        willmore_energy=energy,
        energy_quantum_ratio=ratio,
        mask_fraction=dm.mask_fraction,
        masked_points=dm.masked_points,
        monodromy_defect=ps.monodromy_defect,
        cell_residual=ps.cell_residual,
    )
    logger.info("transform_quality", mu=str(ps.mu), degenerate=dm.degenerate, willmore_energy=energy)
    return report


def export_mesh(dm: DarbouxMap, path: str | Path) -> Path:
    """Write f# as a sampled-surface document; a constant transform is written as its constant grid.

    Raises:
        DarbouxError: If f# passes through infinity on the grid.
    """
    if dm.degenerate and dm.constant_value is not None:
        values = np.broadcast_to(dm.constant_value, dm.fsharp.shape)
    elif dm.mask.all():
        values = dm.fsharp
    else:
        raise DarbouxError(
            "Transform has masked points and cannot be exported as a surface",
            {"masked_points": dm.masked_points},
        )
    return write_surface(path, dm.section.family.lattice, values)
