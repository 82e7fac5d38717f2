import numpy as np
import pytest

from euler2c.model import ProblemParams


@pytest.fixture
def p03():
    return ProblemParams(0.3)


@pytest.fixture
def p05():
    return ProblemParams(0.5)


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)
