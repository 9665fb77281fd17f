import math

import numpy as np
import pytest
from hypothesis import strategies as st

from qwpath.core import WalkSpec


def random_spec(rng: np.random.Generator, n: int) -> WalkSpec:
    a = rng.uniform(0, 2 * math.pi)
    return WalkSpec(n, theta=rng.uniform(-math.pi, math.pi),
                    alpha=math.cos(a), beta=math.sin(a),
                    phi=rng.uniform(0, 2 * math.pi))


@st.composite
def specs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    theta = draw(st.floats(-math.pi, math.pi))
    a = draw(st.floats(0, 2 * math.pi))
    phi = draw(st.floats(0, 2 * math.pi))
    return WalkSpec(n, theta, math.cos(a), math.sin(a), phi)


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)
