import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import specs
from qwpath.core import StateVector, WalkSpec
from qwpath.evolver import distribution, evolve, initial_state, step
from qwpath.pathsum import sum_over_paths

S = math.sqrt(0.5)


def as_dict(state, tol=0.0):
    return {k: v for k, v in state.entries().items() if abs(v) > tol}


def test_initial_state_examples():
    assert as_dict(initial_state(WalkSpec(0, 0.3, 1.0, 0.0, 0.0))) == {(0, 0): 1}
    st_ = initial_state(WalkSpec(0, 0.3, 0.0, 1.0, math.pi))
    assert st_[(0, 0)] == 0
    assert st_[(1, 0)] == pytest.approx(-1, abs=1e-15)
    st_ = initial_state(WalkSpec(0, 0.3, S, S, math.pi / 2))
    assert st_[(0, 0)] == pytest.approx(0.7071067811865476)
    assert st_[(1, 0)] == pytest.approx(0.7071067811865476j, abs=1e-15)


@pytest.mark.parametrize("theta", [0.0, 0.3, 1.1, math.pi / 4, 2.5, -0.7])
def test_step_from_coin_zero(theta):
    out = step(StateVector.from_entries(0, {(0, 0): 1}), theta)
    assert out.step == 1
    assert out[(0, -1)] == pytest.approx(math.cos(theta), abs=1e-15)
    assert out[(1, 1)] == pytest.approx(math.sin(theta), abs=1e-15)


def test_step_degenerate_coin_one():
    out = step(StateVector.from_entries(0, {(1, 0): 1}), 0.0)
    assert as_dict(out) == {(1, 1): -1}


def test_two_hadamard_steps():
    s = StateVector.from_entries(0, {(0, 0): 1})
    s = step(step(s, math.pi / 4), math.pi / 4)
    expected = {(0, -2): 0.5, (0, 0): 0.5, (1, 0): 0.5, (1, 2): -0.5}
    got = as_dict(s, 1e-15)
    assert got.keys() == expected.keys()
    for k, v in expected.items():
        assert got[k] == pytest.approx(v, abs=1e-15)


def test_step_matches_one_step_formula():
    # full one-step expansion with both coin components present
    alpha, beta, phi, theta = 0.6, 0.8, 0.9, 0.4
    out = evolve(WalkSpec(1, theta, alpha, beta, phi))
    e = complex(math.cos(phi), math.sin(phi))
    assert out[(0, -1)] == pytest.approx(alpha * math.cos(theta) + e * beta * math.sin(theta), abs=1e-15)
    assert out[(1, 1)] == pytest.approx(alpha * math.sin(theta) - e * beta * math.cos(theta), abs=1e-15)


def test_evolve_zero_steps_is_initial_state():
    spec = WalkSpec(0, 0.3, 0.6, 0.8, 1.2)
    assert evolve(spec) == initial_state(spec)


def test_evolve_two_steps_distribution():
    d = distribution(evolve(WalkSpec(2, math.pi / 4)))
    assert d == pytest.approx({-2: 0.25, 0: 0.5, 2: 0.25}, abs=1e-15)


def test_distribution_examples():
    assert distribution(StateVector.from_entries(0, {(0, 0): 1})) == {0: 1.0}
    theta = 0.37
    d = distribution(evolve(WalkSpec(1, theta)))
    assert d == pytest.approx({-1: math.cos(theta) ** 2, 1: math.sin(theta) ** 2}, abs=1e-15)


@settings(max_examples=40, deadline=None)
@given(specs(max_n=1000))
def test_norm_preserved(spec):
    assert abs(evolve(spec).norm_squared() - 1) <= 1e-9


@settings(max_examples=60, deadline=None)
@given(specs(max_n=60))
def test_support_parity(spec):
    state = evolve(spec)
    for (coin, x), amp in state.entries().items():
        assert abs(x) <= spec.n and (x - spec.n) % 2 == 0
    # unreachable columns stay exactly empty
    odd_cols = state.amplitudes[:, 1::2]
    assert not np.any(odd_cols)


@pytest.mark.parametrize("n", [0, 1, 2, 7, 50])
def test_theta_zero_is_deterministic(n):
    alpha, beta, phi = 0.6, 0.8, 1.3
    state = evolve(WalkSpec(n, 0.0, alpha, beta, phi))
    e = complex(math.cos(phi), math.sin(phi))
    expected = StateVector.from_entries(n, {(0, -n): alpha, (1, n): (-1) ** n * beta * e} if n else
                                        {(0, 0): alpha, (1, 0): beta * e})
    assert state.max_abs_diff(expected) <= 1e-12


@pytest.mark.parametrize("theta", [0.2, math.pi / 4, 1.0, 2.2])
def test_dual_symmetry(theta):
    for n in range(0, 51):
        p_b = evolve(WalkSpec(n, theta, 1.0, 0.0)).probabilities()
        p_f = evolve(WalkSpec(n, theta, 0.0, 1.0)).probabilities()
        np.testing.assert_allclose(p_b, p_f[::-1], atol=1e-13)
        if n <= 10:
            q_f = sum_over_paths(WalkSpec(n, theta, 0.0, 1.0)).probabilities()
            np.testing.assert_allclose(p_b, q_f[::-1], atol=1e-13)


def test_accumulation_is_bit_reproducible():
    spec = WalkSpec(200, 0.61, 0.6, 0.8, 0.4)
    assert evolve(spec) == evolve(spec)
