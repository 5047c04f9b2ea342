"""Configuration loader for YAML and flat key=value files."""

from pathlib import Path
from typing import Any, Optional, Union

import yaml
from pydantic import ValidationError

from src.common.exceptions import ConfigError, InputFileError

from .schemas import RunConfig

# flat key -> (section, field); mirrors the CLI flags
FLAT_KEYS: dict[str, tuple[str, ...]] = {
    "surface": ("surface", "source"),
    "eta": ("eta", "policy"),
    "ambient": ("eta", "ambient"),
    "circles": ("sweep", "circles"),
    "samples": ("sweep", "samples"),
    "radius": ("sweep", "classify_radius"),
    "classify-samples": ("sweep", "classify_samples"),
    "exclusion": ("sweep", "exclusion_radius"),
    "mu": ("sweep", "mu"),
    "eigen-index": ("sweep", "eigen_index"),
    "tol-eig": ("tolerances", "eig"),
    "tol-rank": ("tolerances", "rank"),
    "tol-ode": ("tolerances", "ode"),
    "tol-conformal": ("tolerances", "conformal"),
    "steps": ("transport", "steps"),
    "out": ("output", "out_dir"),
    "log-level": ("logging", "level"),
    "log-format": ("logging", "format"),
    "workers": ("workers",),
    "seed": ("seed",),
}


def _assign(target: dict[str, Any], path: tuple[str, ...], value: Any) -> None:
    for key in path[:-1]:
        target = target.setdefault(key, {})
    target[path[-1]] = value


def flat_to_nested(pairs: dict[str, str]) -> dict[str, Any]:
    """Translate flat flag-style keys into the nested RunConfig layout.

    Args:
        pairs: Mapping such as {"dims": "64x64", "param.r": "0.6", "annulus": "0.25,4"}

    Returns:
        Nested dictionary suitable for RunConfig(**...)

    Raises:
        ConfigError: On unknown keys or unparsable values
    """
    nested: dict[str, Any] = {}
    for raw_key, raw_value in pairs.items():
        key = raw_key.strip().replace("_", "-")
        value = raw_value.strip()
        try:
            if key == "dims":
                n1, n2 = value.lower().split("x")
                _assign(nested, ("grid", "n1"), int(n1))
                _assign(nested, ("grid", "n2"), int(n2))
            elif key == "annulus":
                r_min, r_max = value.split(",")
                _assign(nested, ("sweep", "r_min"), float(r_min))
                _assign(nested, ("sweep", "r_max"), float(r_max))
            elif key == "base-point":
                a, b = value.split(",")
                _assign(nested, ("grid", "base_point"), (int(a), int(b)))
            elif key.startswith("param."):
                _assign(nested, ("surface", "params", key[len("param."):]), float(value))
            elif key in FLAT_KEYS:
                _assign(nested, FLAT_KEYS[key], value)
            else:
                raise ConfigError(f"Unknown configuration key: {raw_key}")
        except ValueError as exc:
            raise ConfigError(f"Bad value for {raw_key}", {"value": raw_value}) from exc
    return nested


def _deep_merge(base: dict[str, Any], update: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigLoader:
    """Loads and validates run configuration."""

    @staticmethod
    def load(config_path: Union[str, Path]) -> RunConfig:
        """Load configuration from a YAML or flat key=value file.

        Args:
            config_path: Path to the configuration file

        Returns:
            RunConfig: Validated run configuration

        Raises:
            InputFileError: If the file doesn't exist or cannot be parsed
            ConfigError: If the values are invalid
        """
        path = Path(config_path)
        if not path.exists():
            raise InputFileError(f"Configuration file not found: {config_path}")

        text = path.read_text(encoding="utf-8")
        if path.suffix in (".yaml", ".yml"):
            try:
                config_dict = yaml.safe_load(text)
            except yaml.YAMLError as exc:
                raise InputFileError(f"Invalid YAML in {config_path}") from exc
            if config_dict is None:
                raise InputFileError(f"Empty configuration file: {config_path}")
        else:
            config_dict = flat_to_nested(ConfigLoader.parse_flat(text))

        return ConfigLoader.validate(config_dict)

    @staticmethod
    def parse_flat(text: str) -> dict[str, str]:
        """Parse 'key=value' lines; blank lines and '#' comments are skipped."""
        pairs: dict[str, str] = {}
        for number, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InputFileError(f"Expected key=value on line {number}", {"line": line})
            key, value = line.split("=", 1)
            pairs[key.strip()] = value.strip()
        return pairs

    @staticmethod
    def validate(config_dict: dict[str, Any]) -> RunConfig:
        """Build a RunConfig, converting pydantic errors into ConfigError."""
        try:
            return RunConfig(**config_dict)
        except ValidationError as exc:
            raise ConfigError("Invalid configuration", {"errors": exc.error_count()}) from exc

    @staticmethod
    def load_or_default(config_path: Optional[Union[str, Path]] = None) -> RunConfig:
        """Load configuration from a file or return defaults.

        Args:
            config_path: Optional path to the configuration file

        Returns:
            RunConfig: Validated run configuration
        """
        if config_path is None:
            return RunConfig()
        return ConfigLoader.load(config_path)

    @staticmethod
    def merge(config: RunConfig, overrides: dict[str, str]) -> RunConfig:
        """Apply flat flag overrides on top of a configuration (flags win)."""
        if not overrides:
            return config
        merged = _deep_merge(config.model_dump(), flat_to_nested(overrides))
        return ConfigLoader.validate(merged)

    @staticmethod
    def save(config: RunConfig, config_path: Union[str, Path]) -> None:
        """Save configuration to a YAML file.

        Args:
            config: Run configuration to save
            config_path: Path to save the YAML configuration file
        """
        path = Path(config_path)
        path.parent.mkdir(parents=True, exist_ok=True)

        with open(path, "w", encoding="utf-8") as f:
            yaml.safe_dump(config.model_dump(mode="json"), f, default_flow_style=False, sort_keys=False)
