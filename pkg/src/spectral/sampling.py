"""Sampling the holonomy spectral curve over the mu-plane with eigenvalue continuation."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np
import pandas as pd
from scipy.optimize import linear_sum_assignment

from src.common.config import ToleranceConfig, TransportConfig
from src.common.exceptions import SpectralError
from src.common.logging import get_logger
from src.common.types import CaseKind, CaseLabel
from src.common.utils import ordered_map
from src.family import MuForm
from src.holonomy import generator_holonomy, sort_spectrum

from .multipliers import common_multipliers
from .polynomials import characteristic_polynomial, discriminant, strip_trivial, trivial_order

logger = get_logger(__name__)


@dataclass(frozen=True)
class SpectralSample:
    """Spectral data at one mu."""

    mu: complex
    quartic: np.ndarray
    reduced: np.ndarray
    k_trivial: int
    eigenvalues: np.ndarray
    multipliers: Optional[np.ndarray] = None
    flagged: bool = False

    @property
    def discriminant(self) -> complex:
        return discriminant(self.reduced)

    @property
    def determinant(self) -> complex:
        """Product of all four eigenvalues, 1 for SL(4, C) holonomy."""
        return complex((-1) ** (len(self.quartic) - 1) * self.quartic[-1])


def _pair_cost(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.abs(a[:, None] - b[None, :])


def continuation_order(previous: np.ndarray, current: np.ndarray) -> np.ndarray:
    """Indices into `current` continuing each entry of `previous`."""
    rows, cols = linear_sum_assignment(_pair_cost(previous, current))
    return cols[np.argsort(rows)]


def match_eigenvalues(previous: np.ndarray, current: np.ndarray, tol: float) -> tuple[np.ndarray, bool]:
    """Order `current` to continue `previous`; flag when the matching is not clear-cut."""
    ordered = current[continuation_order(previous, current)]
    n = len(current)
    if n < 2:
        return ordered, False
    gaps = _pair_cost(current, current) + np.diag(np.full(n, np.inf))
    scale = max(1.0, float(np.max(np.abs(current))))
    displacement = float(np.max(np.abs(ordered - previous)))
    ambiguous = float(np.min(gaps)) <= max(tol * scale, 2.0 * displacement)
    return ordered, ambiguous


def track(samples: Sequence[SpectralSample], tol: float, start: Optional[np.ndarray] = None) -> list[SpectralSample]:
    """Reorder eigenvalues of consecutive samples by continuation; ambiguous steps are flagged."""
    tracked: list[SpectralSample] = []
    previous = start
    for s in samples:
        if previous is None:
            tracked.append(s)
            previous = s.eigenvalues
            continue
        order = continuation_order(previous, s.eigenvalues)
        ordered, ambiguous = match_eigenvalues(previous, s.eigenvalues, tol)
        multipliers = None if s.multipliers is None else s.multipliers[order]
        tracked.append(replace(s, eigenvalues=ordered, multipliers=multipliers, flagged=s.flagged or ambiguous))
        previous = ordered
    return tracked


def relabel(sample: SpectralSample, order: np.ndarray) -> SpectralSample:
    """Apply a fixed sheet relabelling."""
    multipliers = None if sample.multipliers is None else sample.multipliers[order]
    return replace(sample, eigenvalues=sample.eigenvalues[order], multipliers=multipliers)


def loop_permutation(first: np.ndarray, last: np.ndarray, tol: float) -> tuple[list[int], bool]:
    """Sheet map of a tracked closed loop: sheet k ends at last[k], which continues to first[perm[k]]."""
    _, ambiguous = match_eigenvalues(last, first, tol)
    perm = [int(c) for c in continuation_order(last, first)]
    return perm, ambiguous


@dataclass
class SpectralSampler:
    """Evaluates the spectral data of one generator holonomy, caching by mu."""

    mf: MuForm
    case: CaseKind
    generator: str = "g1"
    base_point: tuple[int, int] = (0, 0)
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    transport_settings: TransportConfig = field(default_factory=TransportConfig)
    exclusion_radius: float = 1e-2
    workers: int = 1
    trivial: Optional[int] = None
    _cache: dict = field(default_factory=dict, init=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    def __post_init__(self) -> None:
        if isinstance(self.case, CaseLabel):
            self.case = self.case.label
        self.case = CaseKind(self.case)
        self.k_trivial = trivial_order(self.case) if self.trivial is None else self.trivial

    @classmethod
    def from_label(cls, mf: MuForm, label: CaseLabel, **kwargs) -> SpectralSampler:
        """Sampler on the generator most often chosen by the classifier."""
        generators = [e.generator for e in label.evidence if e.label == label.label]
        if generators and "generator" not in kwargs:
            kwargs["generator"] = max(sorted(set(generators)), key=generators.count)
        return cls(mf=mf, case=label.label, **kwargs)

    @property
    def sheets(self) -> int:
        return self.mf.dim - self.k_trivial

    def holonomy(self, mu: complex) -> np.ndarray:
        return self._generator_matrix(mu, self.generator)

    def sample(self, mu: complex, with_multipliers: bool = False) -> SpectralSample:
        """Quartic, reduced polynomial and eigenvalues at mu.

        Raises:
            SpectralError: If mu lies in the exclusion disk around 1.
        """
        mu = complex(mu)
        if abs(mu - 1.0) < self.exclusion_radius:
            raise SpectralError("mu lies in the exclusion disk around 1", {"mu": str(mu)})
        key = (round(mu.real, 12), round(mu.imag, 12), with_multipliers)
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        H = self.holonomy(mu)
        quartic = characteristic_polynomial(H)
        reduced = strip_trivial(quartic, self.case, self.tolerances.eig, self.k_trivial)
        eigenvalues = sort_spectrum(np.roots(reduced)) if len(reduced) > 1 else np.zeros(0, dtype=complex)
        multipliers = None
        if with_multipliers:
            multipliers = self.multipliers(mu, H, eigenvalues)
        result = SpectralSample(
            mu=mu,
            quartic=quartic,
            reduced=reduced,
            k_trivial=self.k_trivial,
            eigenvalues=eigenvalues,
            multipliers=multipliers,
        )
        with self._lock:
            self._cache[key] = result
        return result

    def multipliers(self, mu: complex, H: np.ndarray, eigenvalues: np.ndarray) -> np.ndarray:
        """(h(gamma1), h(gamma2)) on the eigenline of each nontrivial eigenvalue, shape (sheets, 2)."""
        h1 = H if self.generator == "g1" else self._generator_matrix(mu, "g1")
        h2 = H if self.generator == "g2" else self._generator_matrix(mu, "g2")
        return common_multipliers(H, h1, h2, eigenvalues, self.tolerances.eig)

    def _generator_matrix(self, mu: complex, name: str) -> np.ndarray:
        return generator_holonomy(
            self.mf,
            mu,
            name,
            self.base_point,
            steps=self.transport_settings.steps,
            tol=self.tolerances.ode,
            max_refinements=self.transport_settings.max_refinements,
        ).H

    def discriminant_at(self, mu: complex) -> complex:
        return self.sample(mu).discriminant

    def path(self, mus: Sequence[complex], with_multipliers: bool = False) -> list[SpectralSample]:
        """Samples along a path, tracked by continuation."""
        samples = [self.sample(m, with_multipliers) for m in mus]
        return track(samples, self.tolerances.eig)

    def circle(
        self,
        radius: float,
        count: int,
        center: complex = 0.0,
        with_multipliers: bool = False,
    ) -> list[SpectralSample]:
        """count samples on a circle, half a step off the real axis, tracked counter-clockwise."""
        angles = 2.0 * np.pi * (np.arange(count) + 0.5) / count
        return self.path(complex(center) + radius * np.exp(1j * angles), with_multipliers)

    def circle_permutation(self, samples: Sequence[SpectralSample]) -> tuple[list[int], bool]:
        """Sheet permutation after one loop of a tracked closed path."""
        first, last = samples[0].eigenvalues, samples[-1].eigenvalues
        perm, ambiguous = loop_permutation(first, last, self.tolerances.eig)
        return perm, ambiguous or any(s.flagged for s in samples)

    def annulus(
        self,
        r_min: float,
        r_max: float,
        circles: int,
        samples: int,
        with_multipliers: bool = False,
    ) -> list[list[SpectralSample]]:
        """Concentric circles, computed in parallel and stitched radially so sheet labels agree."""
        radii = np.geomspace(r_min, r_max, circles)
        rings = ordered_map(
            lambda r: self.circle(float(r), samples, with_multipliers=with_multipliers),
            radii,
            self.workers,
        )
        stitched = [rings[0]]
        for ring in rings[1:]:
            order = continuation_order(stitched[-1][0].eigenvalues, ring[0].eigenvalues)
            stitched.append([relabel(s, order) for s in ring])
        logger.debug("annulus_sampled", circles=circles, samples=samples, flagged=sum(s.flagged for r in stitched for s in r))
        return stitched


def samples_frame(samples: Sequence[SpectralSample]) -> pd.DataFrame:
    """CSV layout: mu_re, mu_im, lamK_re, lamK_im, ..., k_trivial, flags."""
    rows = []
    for s in samples:
        row = {"mu_re": s.mu.real, "mu_im": s.mu.imag}
        for k, lam in enumerate(s.eigenvalues, start=1):
            row[f"lam{k}_re"] = lam.real
            row[f"lam{k}_im"] = lam.imag
        if s.multipliers is not None:
            for k, (h1, h2) in enumerate(s.multipliers, start=1):
                row[f"h{k}_1_re"], row[f"h{k}_1_im"] = h1.real, h1.imag
                row[f"h{k}_2_re"], row[f"h{k}_2_im"] = h2.real, h2.imag
        row["k_trivial"] = s.k_trivial
        row["flags"] = "ambiguous" if s.flagged else ""
        rows.append(row)
    return pd.DataFrame(rows)
