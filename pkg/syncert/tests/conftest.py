"""Fixtures for the test session accessible to all syncert test modules."""

from pathlib import Path

import numpy as np
import pytest

from syncert.analysis.network import array_from_edges
from syncert.configs.networks import load_network_file
from syncert.constants import BUNDLED_NETWORKS_PATH


@pytest.fixture(scope="session")
def networks_dir():
    return BUNDLED_NETWORKS_PATH


@pytest.fixture(scope="session")
def resources_dir():
    return Path(__file__).parent / "resources"


@pytest.fixture
def example1():
    """Dampers on (2,4), springs on (1,2) and (2,3); 0-based edges below."""
    return array_from_edges(4, 1.0, [(1, 3, 1.0, 0.0), (0, 1, 0.0, 1.0), (1, 2, 0.0, 1.0)])


@pytest.fixture
def example2():
    """Damper on (2,3), springs on (1,2) and (3,4)."""
    return array_from_edges(4, 1.0, [(1, 2, 1.0, 0.0), (0, 1, 0.0, 1.0), (2, 3, 0.0, 1.0)])


@pytest.fixture
def path_dampers():
    return array_from_edges(3, 1.0, [(0, 1, 1.0, 0.0), (1, 2, 1.0, 0.0), (0, 2, 0.0, 1.0)])


@pytest.fixture
def example1_lc(networks_dir):
    return load_network_file(networks_dir / "example1-lc.json").to_domain()


@pytest.fixture
def example2_lc(networks_dir):
    return load_network_file(networks_dir / "example2-lc.json").to_domain()


@pytest.fixture
def ring4(networks_dir):
    """Four-node ring whose (1,2) and (2,3) couplings short at w=1."""
    return load_network_file(networks_dir / "ring4-shorts.json").to_domain()


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)
