import numpy as np
import pytest

from csl_bounds import CubeGeometry
from csl_bounds.presets import LISA_PATHFINDER


@pytest.fixture
def lisa():
    return CubeGeometry(LISA_PATHFINDER["side_m"], LISA_PATHFINDER["mass_kg"])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
