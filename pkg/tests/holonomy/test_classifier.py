"""Tests for the holonomy case classifier."""

import pytest

from src.common.exceptions import ClassificationError
from src.common.types import CaseKind
from src.family import fixture_family
from src.holonomy import HolonomyClassifier, circle_samples, classify


class TestClassify:
    """Tests for classify."""

    def test_willmore_clifford_is_case_one(self, clifford_families):
        """rho = 0 gives four distinct eigenvalues."""
        label = classify(clifford_families[0.0], circle_samples(0.5, 8))
        assert label.label == CaseKind.I
        assert label.majority_fraction >= 0.75

    @pytest.mark.parametrize("rho", [-0.5, 0.5])
    def test_cmc_endpoints_are_case_two(self, clifford_families, rho):
        """rho = +-1/2 gives a two dimensional common eigenspace with eigenvalue 1."""
        label = classify(clifford_families[rho], circle_samples(0.5, 8))
        assert label.label == CaseKind.II
        assert all(e.common_unit_rank == 2 for e in label.evidence if e.label == CaseKind.II)

    def test_zero_fixture_is_case_three_a(self):
        """A_o = 0 gives trivial holonomy."""
        label = classify(fixture_family("zero"), circle_samples(0.5, 8))
        assert label.label == CaseKind.IIIA
        assert label.majority_fraction == 1.0

    def test_jordan_fixture_is_case_three_b(self):
        """The nilpotent fixture gives two Jordan blocks at every sample."""
        label = classify(fixture_family("jordan"), circle_samples(2.0, 8))
        assert label.label == CaseKind.IIIB

    def test_evidence_is_sorted(self, clifford_families):
        """Evidence comes back ordered by argument regardless of worker count."""
        mus = circle_samples(0.5, 8)[::-1]
        serial = classify(clifford_families[0.0], mus)
        threaded = classify(clifford_families[0.0], mus, workers=4)
        assert [e.mu for e in serial.evidence] == [e.mu for e in threaded.evidence]
        assert serial.label == threaded.label

    def test_too_few_samples(self):
        """Fewer than eight samples are refused."""
        with pytest.raises(ClassificationError):
            classify(fixture_family("zero"), circle_samples(0.5, 4))

    def test_unit_circle_refused(self):
        """Samples on |mu| = 1 are refused."""
        with pytest.raises(ClassificationError):
            classify(fixture_family("zero"), circle_samples(1.0, 8))


class TestSweep:
    """Tests for HolonomyClassifier.sweep."""

    def test_records(self, clifford_families):
        """One record per sample with small invariants."""
        sweep = HolonomyClassifier(clifford_families[0.0]).sweep(0.5, 8)
        assert len(sweep.records) == 8
        for record in sweep.records:
            assert record.det_drift < 1e-8
            assert record.commutator_norm < 1e-8
            assert len(record.eigenvalues) == 4
