"""Tests for the command-line interface."""

import json

import numpy as np
import pytest
from typer.testing import CliRunner

from src.common.config import SweepConfig
from src.common.types import CaseKind, CaseLabel
from src.orchestrator import app, flags_to_overrides
from src.orchestrator.pipeline_manager import PipelineManager

runner = CliRunner()


def invoke(*args: str):
    return runner.invoke(app, [*args, "--log-level", "ERROR"])


def read(path):
    return json.loads(path.read_text())


class TestOverrides:
    """Tests for flag translation."""

    def test_unset_flags_skipped(self):
        """Only given flags become overrides."""
        assert flags_to_overrides(dims="32x32", eta=None, tol_eig=1e-7) == {"dims": "32x32", "tol-eig": "1e-07"}

    def test_params(self):
        """--param NAME=VALUE becomes param.NAME."""
        assert flags_to_overrides(param=["r=0.6"]) == {"param.r": "0.6"}


class TestAnalyzeCommand:
    """Tests for cw-holonomy analyze."""

    def test_clifford(self, temp_output_dir):
        """The Clifford torus has W = 2 pi^2 and deg_perp = 0."""
        result = invoke("analyze", "--surface", "clifford", "--dims", "32x32", "--eta", "zero", "--out", str(temp_output_dir))
        assert result.exit_code == 0
        report = read(temp_output_dir / "analysis.json")
        assert report["schema_version"] == "1.0"
        assert report["willmore_energy"] == pytest.approx(2 * np.pi**2, rel=1e-8)
        assert report["umbilic_energy"] == pytest.approx(4 * np.pi**2, rel=1e-8)
        assert report["deg_perp"] == 0

    def test_homogeneous_mean_curvature(self, temp_output_dir):
        """H^{S^3} = (s/r - r/s)/2 for r = 0.6."""
        result = invoke(
            "analyze", "--surface", "homogeneous", "--param", "r=0.6", "--dims", "32x32", "--out", str(temp_output_dir)
        )
        assert result.exit_code == 0
        report = read(temp_output_dir / "analysis.json")
        assert report["sphere_mean_curvature"] == pytest.approx(0.5 * (0.8 / 0.6 - 0.6 / 0.8), abs=1e-8)
        assert report["sphere_mean_curvature_drift"] < 1e-8

    def test_malformed_file(self, tmp_path):
        """Unreadable surface input exits with 1."""
        bad = tmp_path / "torus.json"
        bad.write_text("{not json")
        result = invoke("analyze", "--surface", f"file:{bad}")
        assert result.exit_code == 1

    def test_bad_dims(self):
        """Unparsable flags are validation failures."""
        assert invoke("analyze", "--dims", "big").exit_code == 2

    def test_config_file_with_override(self, tmp_path, temp_output_dir):
        """Flags win over the key=value configuration file."""
        config = tmp_path / "run.cfg"
        config.write_text("# homogeneous torus\nsurface=homogeneous\nparam.r=0.6\ndims=16x16\n")
        result = invoke("analyze", "--config", str(config), "--surface", "clifford", "--out", str(temp_output_dir))
        assert result.exit_code == 0
        report = read(temp_output_dir / "analysis.json")
        assert report["surface"] == "clifford"
        assert report["dims"] == [16, 16]


class TestClassifyCommand:
    """Tests for cw-holonomy classify."""

    @pytest.mark.parametrize("eta, label", [("zero", "I"), ("cmc:0.5", "II")])
    def test_clifford(self, temp_output_dir, eta, label):
        """rho = 0 is Case I and rho = 1/2 is Case II."""
        result = invoke(
            "classify", "--surface", "clifford", "--dims", "32x32", "--eta", eta, "--samples", "8",
            "--out", str(temp_output_dir),
        )
        assert result.exit_code == 0
        assert read(temp_output_dir / "classification.json")["label"] == label

    def test_zero_fixture(self, temp_output_dir):
        """The zero-form fixture is IIIa."""
        result = invoke("classify", "--surface", "fixture:zero", "--dims", "16x16", "--samples", "8", "--out", str(temp_output_dir))
        assert result.exit_code == 0
        assert read(temp_output_dir / "classification.json")["label"] == "IIIa"

    def test_undetermined_exit_code(self, monkeypatch, temp_output_dir):
        """An undetermined label is reported and exits with 3."""
        undetermined = CaseLabel(label=CaseKind.UNDETERMINED, radius=0.5, samples=8, majority_fraction=0.5, evidence=[])
        monkeypatch.setattr(PipelineManager, "classify", lambda self: undetermined)
        result = invoke("classify", "--surface", "fixture:zero", "--out", str(temp_output_dir))
        assert result.exit_code == 3
        assert read(temp_output_dir / "classification.json")["label"] == "Undetermined"

    def test_samples_set_classification_circle(self, monkeypatch, temp_output_dir):
        """--samples on classify sizes the classification circle, not the sweep."""
        seen = {}

        def fake_classify(self):
            seen["classify_samples"] = self.config.sweep.classify_samples
            seen["samples"] = self.config.sweep.samples
            return CaseLabel(label=CaseKind.IIIA, radius=0.5, samples=12, majority_fraction=1.0, evidence=[])

        monkeypatch.setattr(PipelineManager, "classify", fake_classify)
        result = invoke("classify", "--surface", "fixture:zero", "--samples", "12", "--out", str(temp_output_dir))
        assert result.exit_code == 0
        assert seen == {"classify_samples": 12, "samples": SweepConfig().samples}


class TestHolonomyCommand:
    """Tests for cw-holonomy holonomy."""

    def test_worker_count_does_not_change_output(self, tmp_path):
        """Reports are byte-identical for one and two workers."""
        outputs = []
        for workers in ("1", "2"):
            out = tmp_path / workers
            result = invoke(
                "holonomy", "--surface", "clifford", "--dims", "16x16", "--samples", "8",
                "--workers", workers, "--out", str(out),
            )
            assert result.exit_code == 0
            outputs.append((out / "holonomy.json").read_bytes())
        assert outputs[0] == outputs[1]
        records = json.loads(outputs[0])["records"]
        assert len(records) == 8
        assert max(r["det_drift"] for r in records) < 1e-8


class TestSpectralCommand:
    """Tests for cw-holonomy spectral."""

    def test_no_spectral_curve(self):
        """Case III input exits with 4."""
        result = invoke("spectral", "--surface", "fixture:zero", "--dims", "16x16")
        assert result.exit_code == 4

    @pytest.mark.slow
    def test_case_one_genus_interval(self, temp_output_dir):
        """A Case I torus reports a genus interval instead of failing on its end loops."""
        result = invoke(
            "spectral", "--surface", "clifford", "--eta", "zero", "--dims", "16x16", "--out", str(temp_output_dir)
        )
        assert result.exit_code == 0, result.output
        summary = read(temp_output_dir / "spectral_summary.json")
        assert summary["case"] == "I"
        assert summary["genus_low"] <= summary["genus_high"]
        assert set(summary["end_permutations"]) == {"0", "inf"}
        assert (temp_output_dir / "spectral_samples.csv").exists()


class TestDarbouxCommand:
    """Tests for cw-holonomy darboux."""

    def test_trivial_member(self, temp_output_dir):
        """mu = 1 writes a constant mesh flagged degenerate."""
        result = invoke("darboux", "--surface", "clifford", "--dims", "16x16", "--mu", "1", "--out", str(temp_output_dir))
        assert result.exit_code == 0
        quality = read(temp_output_dir / "darboux_quality.json")
        assert quality["degenerate"] is True
        mesh = read(temp_output_dir / "darboux_mesh.json")
        np.testing.assert_allclose(np.asarray(mesh["f"]), 0.0, atol=1e-12)

    def test_bad_eigen_index(self):
        """An eigen index out of range exits with 2."""
        result = invoke("darboux", "--surface", "clifford", "--dims", "16x16", "--mu", "0.5", "--eigen-index", "9")
        assert result.exit_code == 2


class TestConvertCommand:
    """Tests for cw-holonomy convert."""

    def test_round_trip(self, temp_output_dir):
        """A converted builtin analyzes like the builtin."""
        path = temp_output_dir / "clifford.json"
        assert invoke("convert", str(path), "--surface", "clifford", "--dims", "32x32").exit_code == 0
        result = invoke("analyze", "--surface", f"file:{path}", "--dims", "32x32", "--out", str(temp_output_dir))
        assert result.exit_code == 0
        report = read(temp_output_dir / "analysis.json")
        assert report["willmore_energy"] == pytest.approx(2 * np.pi**2, rel=1e-6)
