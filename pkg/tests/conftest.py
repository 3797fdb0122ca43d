import numpy as np
import pytest

from dqeig.models.schemas import SolverConfig


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def cfg():
    return SolverConfig(k_max=1000, delta=1e-10)
