"""Case I / II / III classification of the holonomy representation."""

from __future__ import annotations

from collections import Counter
from typing import Optional, Sequence

import numpy as np

from src.common.config import ToleranceConfig, TransportConfig
from src.common.exceptions import ClassificationError, TransportError
from src.common.logging import get_logger
from src.common.types import CaseKind, CaseLabel, HolonomyRecord, HolonomySweep, MuEvidence
from src.common.utils import ordered_map
from src.family import MuForm

from .eigen import EigenStructure, eigen_structure, numerical_rank
from .transport import GENERATORS, TransportResult, commutator_norm, generator_holonomy

logger = get_logger(__name__)

MAJORITY = 0.75


def circle_samples(radius: float, count: int, phase: float = 0.0) -> list[complex]:
    """count points on |mu| = radius, sorted by argument."""
    angles = 2.0 * np.pi * np.arange(count) / count + phase
    return [complex(radius * np.exp(1j * a)) for a in angles]


def _pair(z: complex) -> tuple[float, float]:
    return (float(z.real), float(z.imag))


class HolonomyClassifier:
    """Classifies the holonomy of an associated family on circles of spectral parameters."""

    def __init__(
        self,
        mf: MuForm,
        base_point: tuple[int, int] = (0, 0),
        tolerances: Optional[ToleranceConfig] = None,
        transport_settings: Optional[TransportConfig] = None,
        workers: int = 1,
    ):
        """
        Initialize the classifier.

        Args:
            mf: Associated family.
            base_point: Grid index of the base point.
            tolerances: Eigenvalue, rank and ODE tolerances.
            transport_settings: RK4 step count and refinements.
            workers: Threads used for the spectral parameter samples.
        """
        self.mf = mf
        self.base_point = mf.base_index(base_point)
        self.tolerances = tolerances or ToleranceConfig()
        self.transport_settings = transport_settings or TransportConfig()
        self.workers = workers

    def holonomy(self, mu: complex, generator: str) -> TransportResult:
        return generator_holonomy(
            self.mf,
            mu,
            generator,
            self.base_point,
            steps=self.transport_settings.steps,
            tol=self.tolerances.ode,
            max_refinements=self.transport_settings.max_refinements,
        )

    def structure(self, H: np.ndarray) -> EigenStructure:
        return eigen_structure(H, self.tolerances.eig, self.tolerances.rank)

    def sample(self, mu: complex) -> MuEvidence:
        """Evidence at one spectral parameter; the generator with most distinct eigenvalues is kept."""
        results = {name: self.holonomy(mu, name) for name in GENERATORS}
        structures = {name: self.structure(r.H) for name, r in results.items()}
        # max() keeps the first maximum, so ties go to the lowest index
        chosen = max(GENERATORS, key=lambda name: structures[name].distinct)
        es = structures[chosen]
        eye = np.eye(self.mf.dim)
        h1, h2 = results["g1"].H, results["g2"].H
        scale = max(1.0, float(np.linalg.norm(h1, 2)), float(np.linalg.norm(h2, 2)))
        common = numerical_rank(np.vstack([h1 - eye, h2 - eye]), self.tolerances.rank, scale)
        label = self._label(es, structures["g1"], structures["g2"], common)
        return MuEvidence(
            mu=_pair(mu),
            label=label,
            generator=chosen,
            eigenvalues=es.pairs(),
            distinct_nontrivial=es.distinct_nontrivial,
            unit_algebraic_multiplicity=es.unit_algebraic,
            unit_geometric_multiplicity=es.unit_geometric,
            rank_h_minus_id=es.rank_h_minus_id,
            rank_h_minus_id_squared=es.rank_h_minus_id_squared,
            common_unit_rank=common,
        )

    @staticmethod
    def _label(es: EigenStructure, g1: EigenStructure, g2: EigenStructure, common: int) -> CaseKind:
        if g1.is_identity and g2.is_identity:
            return CaseKind.IIIA
        if es.unit_algebraic == 0 and es.distinct == 4:
            return CaseKind.I
        if (
            es.unit_algebraic == 2
            and es.unit_geometric == 2
            and es.distinct_nontrivial == 2
            and common == 2
        ):
            return CaseKind.II
        if es.rank_h_minus_id == 2 and es.rank_h_minus_id_squared == 0:
            return CaseKind.IIIB
        return CaseKind.UNDETERMINED

    def _safe_sample(self, mu: complex) -> Optional[MuEvidence]:
        try:
            return self.sample(mu)
        except TransportError as exc:
            logger.warning("sample_skipped", mu=str(mu), reason=exc.message)
            return None

    def classify(self, mus: Sequence[complex]) -> CaseLabel:
        """Majority vote over the samples; Case III needs every sample to agree.

        Raises:
            ClassificationError: For fewer than 8 samples or samples at |mu| in {0, 1}.
        """
        mus = [complex(m) for m in mus]
        if len(mus) < 8:
            raise ClassificationError("At least 8 spectral parameters are needed", {"samples": len(mus)})
        radii = np.abs(mus)
        if np.any(radii < 1e-12) or np.any(np.abs(radii - 1.0) < 1e-9):
            raise ClassificationError("Samples must avoid mu = 0 and the unit circle")
        mus = sorted(mus, key=lambda m: (np.angle(m), abs(m)))
        evidence = [e for e in ordered_map(self._safe_sample, mus, self.workers) if e is not None]
        radius = float(np.mean(radii))
        if len(evidence) * 2 < len(mus):
            return CaseLabel(
                label=CaseKind.UNDETERMINED,
                radius=radius,
                samples=len(mus),
                majority_fraction=0.0,
                evidence=evidence,
                note="transport failed at most samples",
            )
        votes = Counter(e.label for e in evidence)
        top, count = votes.most_common(1)[0]
        fraction = count / len(evidence)
        note = None
        label = top
        if top in (CaseKind.IIIA, CaseKind.IIIB):
            if count != len(evidence):
                label, note = CaseKind.UNDETERMINED, "unipotent holonomy at some samples only"
        elif top == CaseKind.UNDETERMINED or fraction < MAJORITY:
            label, note = CaseKind.UNDETERMINED, f"no majority ({dict(votes)})"
        persistent_unit = all(e.unit_algebraic_multiplicity > 0 for e in evidence)
        if persistent_unit and any(e.unit_algebraic_multiplicity % 2 for e in evidence):
            label, note = CaseKind.UNDETERMINED, "odd multiplicity of the persistent eigenvalue 1"
        logger.info("holonomy_classified", label=label.value, fraction=fraction, samples=len(evidence))
        return CaseLabel(
            label=label,
            radius=radius,
            samples=len(mus),
            majority_fraction=fraction,
            evidence=evidence,
            note=note,
        )

    def classify_circle(self, radius: float = 0.5, samples: int = 16) -> CaseLabel:
        return self.classify(circle_samples(radius, samples))

    def sweep(self, radius: float, samples: int) -> HolonomySweep:
        """Per-mu holonomy records on one circle."""

        def record(mu: complex) -> HolonomyRecord:
            r1, r2 = self.holonomy(mu, "g1"), self.holonomy(mu, "g2")
            return HolonomyRecord(
                mu=_pair(mu),
                eigenvalues=self.structure(r1.H).pairs(),
                eigenvalues_gamma2=self.structure(r2.H).pairs(),
                det_drift=max(r1.det_drift, r2.det_drift),
                commutator_norm=commutator_norm(r1.H, r2.H),
                error_estimate=max(r1.error_estimate, r2.error_estimate),
            )

        records = ordered_map(record, circle_samples(radius, samples), self.workers)
        return HolonomySweep(radius=radius, base_point=self.base_point, records=records)


def classify(
    mf: MuForm,
    mus: Sequence[complex],
    base_point: tuple[int, int] = (0, 0),
    tolerances: Optional[ToleranceConfig] = None,
    transport_settings: Optional[TransportConfig] = None,
    workers: int = 1,
) -> CaseLabel:
    """Classify the holonomy of mf from the samples mus."""
    return HolonomyClassifier(mf, base_point, tolerances, transport_settings, workers).classify(mus)
