"""Branch points of the spectral curve: discriminant winding on polar plaquettes and sheet monodromy."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.common.exceptions import SpectralError, TrackingAmbiguityError
from src.common.logging import get_logger

from .sampling import SpectralSampler

logger = get_logger(__name__)


@dataclass(frozen=True)
class BranchPoint:
    """A zero of the discriminant with the sheet permutation of a small loop around it.

    `permutation` is None when continuation around the loop stayed ambiguous;
    such a candidate ramifies somewhere between 0 and its winding.
    """

    mu: complex
    permutation: Optional[tuple[int, ...]]
    winding: int

    @property
    def resolved(self) -> bool:
        return self.permutation is not None

    @property
    def cycles(self) -> list[list[int]]:
        return permutation_cycles(self.permutation) if self.resolved else []

    @property
    def ramification(self) -> int:
        """Sum over cycles of (length - 1); 0 when unresolved."""
        return sum(len(c) - 1 for c in self.cycles)

    @property
    def max_ramification(self) -> int:
        """Upper bound: the ramification, or the discriminant order when unresolved."""
        return self.ramification if self.resolved else abs(self.winding)

    @property
    def is_branch(self) -> bool:
        return self.ramification > 0


@dataclass(frozen=True)
class Cell:
    """Polar plaquette [r0, r1] x [theta0, theta1]."""

    r0: float
    r1: float
    t0: float
    t1: float

    @property
    def center(self) -> complex:
        return np.sqrt(self.r0 * self.r1) * np.exp(0.5j * (self.t0 + self.t1))

    @property
    def size(self) -> float:
        """Smallest side length."""
        return min(self.r1 - self.r0, self.r0 * (self.t1 - self.t0))

    @property
    def radius(self) -> float:
        """Radius of a circle about the center enclosing the whole cell."""
        corners = [_polar(r, t) for r in (self.r0, self.r1) for t in (self.t0, self.t1)]
        return 1.05 * max(abs(c - self.center) for c in corners)

    def contains(self, mu: complex) -> bool:
        r, t = abs(mu), np.angle(mu) % (2 * np.pi)
        inside = any(self.t0 <= s <= self.t1 for s in (t, t + 2 * np.pi))
        return self.r0 <= r <= self.r1 and inside

    def split(self) -> list[Cell]:
        rm = np.sqrt(self.r0 * self.r1)
        tm = 0.5 * (self.t0 + self.t1)
        return [
            Cell(self.r0, rm, self.t0, tm),
            Cell(rm, self.r1, self.t0, tm),
            Cell(self.r0, rm, tm, self.t1),
            Cell(rm, self.r1, tm, self.t1),
        ]


def permutation_cycles(perm: tuple[int, ...] | list[int]) -> list[list[int]]:
    """Cycle decomposition, fixed points included."""
    seen: set[int] = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        k = perm[start]
        while k != start:
            cycle.append(k)
            seen.add(k)
            k = perm[k]
        cycles.append(cycle)
    return cycles


def _polar(r: float, t: float) -> complex:
    return complex(r * np.exp(1j * t))


def _edge_phase(sampler: SpectralSampler, a: tuple[float, float], b: tuple[float, float], depth: int = 0) -> float:
    """Change of arg(discriminant) along a straight edge in (log r, theta), subdivided until resolved."""
    da = sampler.discriminant_at(_polar(*a))
    db = sampler.discriminant_at(_polar(*b))
    if da == 0 or db == 0:
        raise SpectralError("Discriminant vanishes on a plaquette vertex", {"mu": str(_polar(*(a if da == 0 else b)))})
    step = float(np.angle(db / da))
    if abs(step) < 0.5 * np.pi or depth >= 6:
        return step
    mid = (float(np.sqrt(a[0] * b[0])), 0.5 * (a[1] + b[1]))
    return _edge_phase(sampler, a, mid, depth + 1) + _edge_phase(sampler, mid, b, depth + 1)


def winding(sampler: SpectralSampler, cell: Cell) -> int:
    """Number of discriminant zeros in the cell counted with multiplicity."""
    corners = [(cell.r0, cell.t0), (cell.r1, cell.t0), (cell.r1, cell.t1), (cell.r0, cell.t1)]
    total = sum(_edge_phase(sampler, corners[k], corners[(k + 1) % 4]) for k in range(4))
    return int(round(total / (2.0 * np.pi)))


def near_exclusion(cell: Cell, radius: float) -> bool:
    """True if the boundary of the cell comes close to the exclusion disk around mu = 1."""
    rm = np.sqrt(cell.r0 * cell.r1)
    tm = 0.5 * (cell.t0 + cell.t1)
    points = [_polar(r, t) for r in (cell.r0, rm, cell.r1) for t in (cell.t0, tm, cell.t1) if (r, t) != (rm, tm)]
    return min(abs(p - 1.0) for p in points) < 2.0 * radius


def sheet_monodromy(
    sampler: SpectralSampler,
    center: complex,
    radius: float,
    steps: int = 32,
    max_doublings: int = 3,
) -> tuple[int, ...]:
    """Sheet permutation of a counter-clockwise loop of the given radius around center.

    Raises:
        TrackingAmbiguityError: If continuation stays ambiguous after refining the loop.
    """
    for _ in range(max_doublings + 1):
        samples = sampler.circle(radius, steps, center=center)
        perm, ambiguous = sampler.circle_permutation(samples)
        if not ambiguous:
            return tuple(perm)
        steps *= 2
    raise TrackingAmbiguityError(
        "Eigenvalue continuation around the candidate is ambiguous; use a smaller radius or finer steps",
        {"center": str(center), "radius": radius, "steps": steps},
    )


# non-dyadic offset keeps dyadic refinements off the real axis and |mu| = 1
GRID_SHIFT = (np.sqrt(5.0) - 1.0) / 4.0


def initial_cells(r_min: float, r_max: float, circles: int, samples: int) -> list[Cell]:
    """Polar cells covering the annulus, with interior radii and all angles shifted off the symmetric lines."""
    logs = np.linspace(np.log(r_min), np.log(r_max), circles)
    if circles > 2:
        logs[1:-1] += GRID_SHIFT * (logs[1] - logs[0])
    radii = np.exp(logs)
    angles = 2.0 * np.pi * (np.arange(samples + 1) + GRID_SHIFT) / samples
    return [
        Cell(float(radii[i]), float(radii[i + 1]), float(angles[j]), float(angles[j + 1]))
        for i in range(circles - 1)
        for j in range(samples)
    ]


def locate_zeros(
    sampler: SpectralSampler,
    r_min: float,
    r_max: float,
    circles: int,
    samples: int,
    levels: int = 4,
) -> list[tuple[Cell, int]]:
    """Finest cells with nonzero discriminant winding after `levels` quadrisections.

    Cells around mu = 1 are refined like any other and dropped at the finest
    level, where they only hold the double zero of the trivial member.
    """
    active = initial_cells(r_min, r_max, circles, samples)
    found: list[tuple[Cell, int]] = []
    for level in range(levels + 1):
        found = []
        for cell in active:
            if near_exclusion(cell, sampler.exclusion_radius):
                continue
            try:
                w = winding(sampler, cell)
            except SpectralError as exc:
                logger.warning("cell_skipped", center=str(cell.center), reason=exc.message)
                continue
            if w:
                found.append((cell, w))
        logger.debug("winding_level", level=level, cells=len(found))
        if level < levels:
            active = [sub for cell, _ in found for sub in cell.split()]
    return [(cell, w) for cell, w in found if not cell.contains(1.0 + 0.0j)]


def refine_zero(
    sampler: SpectralSampler,
    start: complex,
    order: int,
    reach: float,
    tol: float = 1e-12,
    max_steps: int = 40,
) -> Optional[complex]:
    """Newton iteration z -> z - order * D(z) / D'(z) on the discriminant D.

    D' is a central difference, exact on the quadratic part, so a zero of
    multiplicity `order` converges quadratically. Returns None when the
    iteration leaves the disk of radius `reach` about `start` or meets the
    exclusion disk.
    """
    z = complex(start)
    h = 1e-3 * reach
    for _ in range(max_steps):
        try:
            f = sampler.discriminant_at(z)
            if f == 0:
                return z
            df = (sampler.discriminant_at(z + h) - sampler.discriminant_at(z - h)) / (2.0 * h)
        except SpectralError:
            return None
        if df == 0:
            return None
        step = order * f / df
        z -= step
        if abs(z - start) > reach:
            return None
        if abs(step) < tol * max(1.0, abs(z)):
            return z
    return z


def _refined(sampler: SpectralSampler, start: complex, order: int, reach: float) -> complex:
    mu = refine_zero(sampler, start, order, reach)
    if mu is None:
        logger.debug("zero_refinement_failed", start=str(start), order=order)
        return complex(start)
    return mu


def merge_candidates(candidates: list[tuple[complex, int, float]]) -> list[tuple[complex, int, float]]:
    """Join (mu, winding, radius) candidates closer than their radii into one of summed winding.

    The merged radius encloses every member loop.
    """
    merged: list[tuple[complex, int, float]] = []
    for mu, w, radius in sorted(candidates, key=lambda c: (c[0].real, c[0].imag)):
        for k, (nu, v, rho) in enumerate(merged):
            if abs(mu - nu) < max(radius, rho):
                center = (abs(v) * nu + abs(w) * mu) / (abs(v) + abs(w))
                reach = max(rho + abs(nu - center), radius + abs(mu - center))
                merged[k] = (center, v + w, reach)
                break
        else:
            merged.append((mu, w, radius))
    return merged


def branch_points(
    sampler: SpectralSampler,
    r_min: float,
    r_max: float,
    circles: int = 8,
    samples: int = 32,
    levels: int = 4,
) -> tuple[list[BranchPoint], list[BranchPoint]]:
    """Discriminant zeros in the annulus, split into branch points and double points.

    The finest plaquettes are refined to their zero by Newton steps, and
    candidates that land together are merged. Each zero is then confirmed by
    the sheet monodromy of a circle enclosing its plaquette. A winding above 1
    is kept as one candidate of that order. Candidates whose loop stays
    ambiguous are kept with an unresolved permutation among the branch points.
    """
    candidates = [
        (_refined(sampler, cell.center, w, cell.radius), w, cell.radius)
        for cell, w in locate_zeros(sampler, r_min, r_max, circles, samples, levels)
    ]
    merged = merge_candidates(candidates)
    if len(merged) < len(candidates):
        merged = [(_refined(sampler, mu, w, radius), w, radius) for mu, w, radius in merged]
    branch: list[BranchPoint] = []
    double: list[BranchPoint] = []
    for mu, w, radius in merged:
        try:
            perm: Optional[tuple[int, ...]] = sheet_monodromy(sampler, mu, radius)
        except TrackingAmbiguityError as exc:
            logger.warning("branch_candidate_unresolved", mu=str(mu), radius=radius, reason=exc.message)
            perm = None
        point = BranchPoint(mu=complex(mu), permutation=perm, winding=w)
        (double if point.resolved and not point.is_branch else branch).append(point)
    unresolved = sum(not p.resolved for p in branch)
    logger.info("branch_points_located", branch=len(branch), double=len(double), unresolved=unresolved)
    return branch, double


def exclusion_reach(
    r_min: float,
    r_max: float,
    circles: int,
    samples: int,
    exclusion_radius: float,
    levels: int = 4,
) -> float:
    """Distance from mu = 1 within which the winding search may skip plaquettes.

    Follows the refinement geometry of `locate_zeros` around mu = 1 without
    sampling, so it bounds the cells skipped at every level.
    """
    reach = 2.0 * exclusion_radius
    active = initial_cells(r_min, r_max, circles, samples)
    for level in range(levels + 1):
        following: list[Cell] = []
        for cell in active:
            if near_exclusion(cell, exclusion_radius) or (level == levels and cell.contains(1.0 + 0.0j)):
                reach = max(reach, abs(cell.center - 1.0) + cell.radius)
            elif level < levels and abs(cell.center - 1.0) < 2.0 * cell.radius:
                following.extend(cell.split())
        active = following
    return reach


def involution_residual(points: list[BranchPoint], r_min: float, r_max: float, exclude: float = 0.0) -> float:
    """Max distance from 1/conj(b) to the nearest located point.

    Only b whose image lies in the annulus and at least `exclude` away from
    mu = 1 take part.
    """
    if not points:
        return 0.0
    positions = np.array([p.mu for p in points])
    worst = 0.0
    for b in positions:
        image = 1.0 / np.conj(b)
        if r_min <= abs(image) <= r_max and abs(image - 1.0) >= exclude:
            worst = max(worst, float(np.min(np.abs(positions - image))))
    return worst


def end_permutation(sampler: SpectralSampler, radius: float, samples: int) -> Optional[tuple[int, ...]]:
    """Sheet permutation of the circle |mu| = radius around the origin, None if continuation stays ambiguous."""
    try:
        return sheet_monodromy(sampler, 0.0, radius, samples)
    except TrackingAmbiguityError as exc:
        logger.warning("end_permutation_unresolved", radius=radius, reason=exc.message)
        return None
