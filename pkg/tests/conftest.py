"""
Pytest configuration and fixtures for cw-holonomy tests.
"""

from pathlib import Path
from typing import Generator

import numpy as np
import pytest
import structlog

from src.common.utils import make_rng
from src.family import connection_form
from src.moebius import CmcRho, apply_eta, hopf_fields, mean_curvature_sphere
from src.surface import builtin_surface, sample_frames


@pytest.fixture(autouse=True)
def _reset_structlog() -> Generator[None, None, None]:
    """Drop logging configuration bound to streams closed by earlier tests (e.g. CliRunner)."""
    yield
    structlog.reset_defaults()


# Get the project root directory
PROJECT_ROOT = Path(__file__).parent.parent


@pytest.fixture
def project_root() -> Path:
    """Return the project root directory."""
    return PROJECT_ROOT


@pytest.fixture
def config_dir() -> Path:
    """Return the config directory."""
    return PROJECT_ROOT / "config"


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for random controls."""
    return make_rng(20240607)


@pytest.fixture(scope="session")
def clifford():
    """The Clifford torus."""
    return builtin_surface("clifford")


@pytest.fixture(scope="session")
def clifford_frames(clifford):
    """Clifford torus frames on a 32 x 32 grid."""
    return sample_frames(clifford, 32, 32)


@pytest.fixture(scope="session")
def homogeneous_frames():
    """Homogeneous torus r = 0.6 frames on a 32 x 32 grid."""
    return sample_frames(builtin_surface("homogeneous", {"r": 0.6}), 32, 32)


@pytest.fixture(scope="session")
def hsl_frames():
    """Linear-angle Lagrangian torus frames on a 32 x 32 grid."""
    return sample_frames(builtin_surface("hsl"), 32, 32)


@pytest.fixture(scope="session")
def clifford_hopf(clifford_frames):
    """Hopf fields of the Clifford torus."""
    return hopf_fields(clifford_frames, mean_curvature_sphere(clifford_frames))


@pytest.fixture(scope="session")
def clifford_circles(clifford_hopf):
    """Modified Hopf fields of the Clifford torus for rho in {-1/2, 0, 1/2}."""
    return {rho: apply_eta(clifford_hopf, CmcRho(rho)) for rho in (-0.5, 0.0, 0.5)}


@pytest.fixture(scope="session")
def clifford_families(clifford_circles):
    """Associated families of the Clifford torus keyed by rho."""
    return {rho: connection_form(circle) for rho, circle in clifford_circles.items()}


def _bump_field(n: int, radius: float = 0.4) -> np.ndarray:
    s, t = np.meshgrid((np.arange(n) + 0.5) / n, (np.arange(n) + 0.5) / n, indexing="ij")
    dx, dy = s - 0.5, t - 0.5
    r = np.hypot(dx, dy)
    theta = np.where(r < radius, 0.5 * np.pi * (1.0 + np.cos(np.pi * r / radius)), 0.0)
    phi = np.arctan2(dy, dx)
    return np.stack([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)], axis=-1)


@pytest.fixture
def bump_field():
    """Factory for a map T^2 -> S^2 covering the sphere once: a polar cap blown up around the center."""
    return _bump_field


@pytest.fixture
def temp_output_dir(tmp_path: Path) -> Generator[Path, None, None]:
    """Create a temporary output directory."""
    output_dir = tmp_path / "output"
    output_dir.mkdir()
    yield output_dir
