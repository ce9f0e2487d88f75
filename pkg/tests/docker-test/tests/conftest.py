# tests/conftest.py
"""
Shared fixtures: shipped data paths, small powerset models and scene universes.
"""

import os
import sys
from pathlib import Path

import pytest
from hypothesis import settings

# Add project src to Python path so the tests run without an install
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..', '..', 'src')))

from mereo_geometry.bridge.universe import universe_from_scene  # noqa: E402
from mereo_geometry.geometry.scene import load_scene  # noqa: E402
from mereo_geometry.mereology.model import make_powerset_model  # noqa: E402

settings.register_profile("default", deadline=None)
settings.load_profile("default")

DATA_DIR = Path(__file__).resolve().parents[3] / "src" / "mereo_geometry" / "data"


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def scenes_dir():
    return DATA_DIR / "scenes"


@pytest.fixture
def formulas_dir():
    return DATA_DIR / "formulas"


@pytest.fixture
def core_registry():
    return DATA_DIR / "registry" / "core.mreg"


@pytest.fixture
def two_atoms():
    """{x}, {y}, {x,y} with a universal constant `u`."""
    return make_powerset_model(2, {"u": [["x"], ["y"], ["x", "y"]]})


@pytest.fixture
def three_atoms():
    return make_powerset_model(3)


@pytest.fixture
def scene_universe(scenes_dir):
    """Loads a shipped scene by stem and returns its universe."""
    def _load(stem):
        return universe_from_scene(load_scene(scenes_dir / f"{stem}.geo"))
    return _load
