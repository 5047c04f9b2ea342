"""Tests for common configuration."""

import pytest

from src.common.config import (
    ConfigLoader,
    EtaConfig,
    GridConfig,
    LoggingConfig,
    RunConfig,
    SweepConfig,
    ToleranceConfig,
    flat_to_nested,
    parse_complex,
)
from src.common.exceptions import ConfigError, InputFileError


class TestConfigSchemas:
    """Tests for configuration schemas."""

    def test_run_config_defaults(self):
        """Defaults describe a 64 x 64 Clifford run with eta = 0."""
        config = RunConfig()
        assert config.surface.source == "clifford"
        assert (config.grid.n1, config.grid.n2) == (64, 64)
        assert config.eta.policy == "zero"
        assert config.workers == 1

    def test_logging_config_defaults(self):
        """Logs default to JSON on stderr."""
        config = LoggingConfig()
        assert config.level == "INFO"
        assert config.format == "json"
        assert config.output == "stderr"

    @pytest.mark.parametrize("policy", ["zero", "cmc:0.5", "cmc:-0.25", "harmonic:left", "file:eta.json"])
    def test_eta_policies_accepted(self, policy):
        """All documented policy forms validate."""
        assert EtaConfig(policy=policy).policy == policy

    @pytest.mark.parametrize("policy", ["cmc:x", "harmonic:up", "file:", "random"])
    def test_eta_policies_rejected(self, policy):
        """Malformed policies are refused."""
        with pytest.raises(ValueError):
            EtaConfig(policy=policy)

    def test_ambient_normalized(self):
        """Ambient names are upper-cased."""
        assert EtaConfig(ambient="r3").ambient == "R3"

    def test_annulus_excludes_origin(self):
        """r_min must be positive and below r_max."""
        with pytest.raises(ValueError):
            SweepConfig(r_min=0.0)
        with pytest.raises(ValueError):
            SweepConfig(r_min=2.0, r_max=1.0)

    def test_classification_circle_avoids_unit_circle(self):
        """|mu| = 1 carries the real form and is refused."""
        with pytest.raises(ValueError):
            SweepConfig(classify_radius=1.0)

    def test_zero_mu_refused(self):
        """mu = 0 is not a spectral parameter."""
        with pytest.raises(ValueError):
            SweepConfig(mu="0")

    def test_tolerances_positive(self):
        """Tolerances must be strictly positive."""
        with pytest.raises(ValueError):
            ToleranceConfig(eig=0.0)
        with pytest.raises(ValueError):
            ToleranceConfig(ode=-1e-8)

    def test_small_grid_refused(self):
        """Grids need at least 8 points per direction."""
        with pytest.raises(ValueError):
            GridConfig(n1=4)

    def test_non_power_of_two_allowed(self):
        """Other dims only warn."""
        assert GridConfig(n1=48, n2=48).n1 == 48

    @pytest.mark.parametrize(
        "text, value",
        [("0.5", 0.5), ("1+2i", 1 + 2j), ("0.3-0.4j", 0.3 - 0.4j), ("1.5, -0.5", 1.5 - 0.5j)],
    )
    def test_parse_complex(self, text, value):
        """Spectral parameters parse from several notations."""
        assert parse_complex(text) == value


class TestFlatKeys:
    """Tests for flat key=value translation."""

    def test_composite_keys(self):
        """dims, annulus, base-point and param.NAME expand to nested fields."""
        nested = flat_to_nested(
            {"dims": "32x16", "annulus": "0.3,3", "base-point": "1,2", "param.r": "0.6", "tol_eig": "1e-7"}
        )
        assert nested["grid"] == {"n1": 32, "n2": 16, "base_point": (1, 2)}
        assert nested["sweep"] == {"r_min": 0.3, "r_max": 3.0}
        assert nested["surface"] == {"params": {"r": 0.6}}
        assert nested["tolerances"] == {"eig": "1e-7"}

    def test_unknown_key(self):
        """Unknown keys are configuration errors."""
        with pytest.raises(ConfigError):
            flat_to_nested({"colour": "red"})

    def test_bad_value(self):
        """Unparsable composite values are configuration errors."""
        with pytest.raises(ConfigError):
            flat_to_nested({"dims": "64"})


class TestConfigLoader:
    """Tests for ConfigLoader."""

    def test_load_default_yaml(self, config_dir):
        """The shipped configuration equals the defaults."""
        config = ConfigLoader.load(config_dir / "run.yaml")
        assert config == RunConfig()

    def test_load_flat(self, tmp_path):
        """key=value files with comments load."""
        path = tmp_path / "run.cfg"
        path.write_text("# sweep\nsurface = homogeneous\nparam.r = 0.6\neta = cmc:0.5\ncircles = 4\n")
        config = ConfigLoader.load(path)
        assert config.surface.source == "homogeneous"
        assert config.surface.params == {"r": 0.6}
        assert config.eta.policy == "cmc:0.5"
        assert config.sweep.circles == 4

    def test_flat_line_without_equals(self, tmp_path):
        """Lines must be key=value."""
        path = tmp_path / "run.cfg"
        path.write_text("dims 64x64\n")
        with pytest.raises(InputFileError):
            ConfigLoader.load(path)

    def test_missing_file(self, tmp_path):
        """A missing file is an input error."""
        with pytest.raises(InputFileError):
            ConfigLoader.load(tmp_path / "absent.yaml")

    def test_invalid_yaml(self, tmp_path):
        """Broken YAML is an input error."""
        path = tmp_path / "bad.yaml"
        path.write_text("grid: [unclosed\n")
        with pytest.raises(InputFileError):
            ConfigLoader.load(path)

    def test_invalid_values(self, tmp_path):
        """Schema violations become ConfigError."""
        path = tmp_path / "bad.yaml"
        path.write_text("grid:\n  n1: 2\n")
        with pytest.raises(ConfigError):
            ConfigLoader.load(path)

    def test_load_or_default(self):
        """No path gives the defaults."""
        assert ConfigLoader.load_or_default(None) == RunConfig()

    def test_merge_flags_win(self):
        """Overrides replace file values and keep the rest."""
        base = RunConfig(sweep=SweepConfig(circles=4))
        merged = ConfigLoader.merge(base, {"dims": "32x32", "samples": "16"})
        assert (merged.grid.n1, merged.grid.n2) == (32, 32)
        assert merged.sweep.samples == 16
        assert merged.sweep.circles == 4

    def test_save_round_trip(self, tmp_path):
        """Saved YAML loads back unchanged."""
        config = RunConfig(eta=EtaConfig(policy="cmc:-0.5"), workers=3)
        path = tmp_path / "nested" / "run.yaml"
        ConfigLoader.save(config, path)
        assert ConfigLoader.load(path) == config
