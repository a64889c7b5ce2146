"""
Thermotopo - Test Fixtures
"""

import os
from fractions import Fraction
from pathlib import Path
from typing import Callable, Generator

import numpy as np
import pytest

# Set test environment
os.environ["APP_ENV"] = "test"
os.environ["METRICS_TEXTFILE"] = ""

from thermotopo.core.config import settings
from thermotopo.lindblad import build_liouvillian
from thermotopo.lindblad.models import LindbladSystem
from thermotopo.lindblad.operators import SIGMA_MINUS
from thermotopo.models import FockBasis, LatticeModelSpec

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"


@pytest.fixture(autouse=True)
def restore_settings() -> Generator[None, None, None]:
    """Undo global flags set by CLI invocations."""
    saved = {
        "APP_DEBUG": settings.APP_DEBUG,
        "REPORT_ELAPSED": settings.REPORT_ELAPSED,
        "METRICS_TEXTFILE": settings.METRICS_TEXTFILE,
    }
    yield
    for key, value in saved.items():
        setattr(settings, key, value)


# =============================================================================
# Lattice Fixtures
# =============================================================================

@pytest.fixture
def single_particle_spec() -> LatticeModelSpec:
    """One free fermion on the 4x6 torus at alpha = 1/8 (three flux quanta)."""
    return LatticeModelSpec(lx=4, ly=6, alpha=Fraction(1, 8), t=1.0, u=0.0, g=0.0, n_particles=1)


@pytest.fixture
def two_particle_spec() -> LatticeModelSpec:
    """Two free fermions on a 4x2 torus with one flux quantum."""
    return LatticeModelSpec(lx=4, ly=2, alpha=Fraction(1, 8), t=1.0, u=0.0, g=0.0, n_particles=2)


@pytest.fixture
def interacting_spec() -> LatticeModelSpec:
    """Three interacting fermions on the 4x6 torus (Fock dimension 2024)."""
    return LatticeModelSpec(lx=4, ly=6, alpha=Fraction(1, 8), t=1.0, u=1.0, g=0.0, n_particles=3)


@pytest.fixture
def small_basis() -> FockBasis:
    """Three fermions on six sites."""
    return FockBasis(6, 3)


# =============================================================================
# Open-System Fixtures
# =============================================================================

@pytest.fixture
def qubit_decay() -> LindbladSystem:
    """Spontaneous decay of one qubit at unit rate."""
    return build_liouvillian(np.zeros((2, 2)), [SIGMA_MINUS])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


# =============================================================================
# Configuration Fixtures
# =============================================================================

@pytest.fixture
def config_dir() -> Path:
    """Shipped example configurations."""
    return CONFIG_DIR


@pytest.fixture
def write_config(tmp_path: Path) -> Callable[[str, str], Path]:
    """Write configuration text to a temporary file and return its path."""

    def _write(text: str, name: str = "config.json") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def lattice_config_json() -> str:
    """Valid single-particle Chern configuration."""
    return """{
  "command": "hh chern",
  "model": {
    "lx": 4,
    "ly": 6,
    "u": 0.0,
    "n_particles": 1
  },
  "manifold": 1,
  "grid": [8, 8],
  "verify": false
}
"""
