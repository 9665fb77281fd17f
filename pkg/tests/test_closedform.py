import math
import time
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import random_spec, specs
from qwpath.closedform import closed_amplitude, closed_state, component_amplitude, group_sums
from qwpath.combinatorics import extended_count, switch_groups
from qwpath.core import WalkSpec, coin_entries
from qwpath.evolver import evolve
from qwpath.pathsum import sum_over_paths

PI4 = math.pi / 4


def exact_group_sums(n, theta):
    """Rational group sums using the double-rounded cos/sin as exact dyadics."""
    c, s = (Fraction(v) for v in coin_entries(theta))
    out = {}
    for g in switch_groups(n):
        key = (g.c, g.final_coin, g.x)
        out[key] = out.get(key, 0) + g.parity * g.multiplicity * c ** (n - g.j) * s ** g.j
    return out


def test_component_examples():
    t = component_amplitude("B", 2, 0, 1, PI4)
    assert (t.coin, t.x) == (1, 0)
    assert t.value == pytest.approx(0.5, abs=1e-15)
    t = component_amplitude("B", 2, 0, 2, PI4)
    assert (t.coin, t.x) == (0, 0)
    assert t.value == pytest.approx(0.5, abs=1e-15)
    for n in range(0, 12):
        t = component_amplitude("B", n, -n, 0, 0.4)
        assert (t.coin, t.x) == (0, -n)
        assert t.value == pytest.approx(math.cos(0.4) ** n, rel=1e-14)


def test_component_empty_group_is_zero():
    assert component_amplitude("F", 3, -3, 0, 0.3).value == 0.0
    assert component_amplitude("B", 4, 0, 7, 0.3).value == 0.0


@pytest.mark.parametrize("theta", [PI4, 0.3, 1.2])
def test_component_large_n_matches_rational(theta):
    n = 1000
    c, s = (Fraction(v) for v in coin_entries(theta))
    for x, j in [(0, 500), (0, 499), (10, 300), (-100, 201), (2, 990)]:
        for letter in "BF":
            m = extended_count(letter, n, x, j)
            if not m:
                continue
            t = component_amplitude(letter, n, x, j, theta)
            exact = m * c ** (n - j) * s ** j
            assert math.isfinite(t.value)
            assert abs(t.value) == pytest.approx(float(exact), rel=1e-12)


def test_closed_state_one_step():
    theta = 1.1
    state = closed_state(WalkSpec(1, theta))
    assert state[(0, -1)] == pytest.approx(math.cos(theta), abs=1e-15)
    assert state[(1, 1)] == pytest.approx(math.sin(theta), abs=1e-15)
    assert state[(0, 1)] == 0 and state[(1, -1)] == 0


def test_closed_state_two_hadamard_steps():
    state = closed_state(WalkSpec(2, PI4))
    expected = {(0, -2): 0.5, (0, 0): 0.5, (1, 0): 0.5, (1, 2): -0.5, (1, -2): 0, (0, 2): 0}
    for k, v in expected.items():
        assert state[k] == pytest.approx(v, abs=1e-15)


def test_closed_state_zero_steps():
    spec = WalkSpec(0, 0.3, 0.6, 0.8, 0.2)
    assert closed_state(spec).max_abs_diff(evolve(spec)) == 0


def test_closed_state_n100_hadamard():
    spec = WalkSpec(100, PI4)
    assert closed_state(spec).max_abs_diff(evolve(spec)) <= 1e-10


@pytest.mark.parametrize("n,theta", [(40, PI4), (60, 0.3), (61, 2.4), (25, -1.0)])
def test_group_sums_match_exact_rationals(n, theta):
    exact = exact_group_sums(n, theta)
    sums = group_sums(n, theta)
    for (c, coin, x), value in exact.items():
        got = sums[0 if c == "B" else 1, coin, x + n]
        assert got == pytest.approx(float(value), abs=1e-15)


def test_three_way_agreement(rng):
    for n in range(0, 15):
        for _ in range(8):
            spec = random_spec(rng, n)
            closed = closed_state(spec)
            assert closed.max_abs_diff(evolve(spec)) <= 1e-12
            assert closed.max_abs_diff(sum_over_paths(spec)) <= 1e-12


@pytest.mark.parametrize("theta", [0.0, math.pi / 2, math.pi, -math.pi / 2, 3 * PI4])
def test_degenerate_and_special_angles(theta):
    for n in (0, 1, 2, 9, 30):
        spec = WalkSpec(n, theta, 0.6, 0.8, 0.7)
        assert closed_state(spec).max_abs_diff(evolve(spec)) <= 1e-12


@settings(max_examples=30, deadline=None)
@given(specs(max_n=200))
def test_closed_matches_evolve_property(spec):
    assert closed_state(spec).max_abs_diff(evolve(spec)) <= 1e-12


@pytest.mark.parametrize("theta", [PI4, 0.2, 1.3])
def test_large_n_agreement(theta):
    spec = WalkSpec(500, theta, 0.6, 0.8, 0.3)
    assert closed_state(spec).max_abs_diff(evolve(spec)) <= 1e-8


def test_scaling_n1000():
    t0 = time.perf_counter()
    state = closed_state(WalkSpec(1000, PI4))
    elapsed = time.perf_counter() - t0
    assert abs(state.norm_squared() - 1) <= 1e-8
    assert elapsed < 5.0


def test_term_count_bound():
    for n in range(0, 25):
        for x in range(-n, n + 1, 2):
            groups = list(switch_groups(n, x))
            for c in "BF":
                assert sum(g.c == c for g in groups) <= n - abs(x) + 2
            assert len(groups) <= 2 * (n - abs(x) + 1)


def test_phase_linearity(rng):
    for n in (3, 10, 40, 150):
        theta = float(rng.uniform(-math.pi, math.pi))
        a = float(rng.uniform(0, 2 * math.pi))
        phi = float(rng.uniform(0, 2 * math.pi))
        spec = WalkSpec(n, theta, math.cos(a), math.sin(a), phi)
        left = closed_state(spec.replace(alpha=1.0, beta=0.0, phi=0.0)).amplitudes
        right = closed_state(spec.replace(alpha=0.0, beta=1.0, phi=0.0)).amplitudes
        combo = spec.coin0 * left + spec.coin1 * right
        assert np.max(np.abs(closed_state(spec).amplitudes - combo)) <= 1e-13


def test_closed_amplitude_single_entries():
    spec = WalkSpec(300, 0.9, 0.6, 0.8, 1.7)
    full = closed_state(spec)
    for coin in (0, 1):
        for x in (-300, -122, 0, 4, 298, 300):
            assert closed_amplitude(spec, coin, x) == pytest.approx(full[(coin, x)], abs=1e-15)
    assert closed_amplitude(spec, 0, 1) == 0
    assert closed_amplitude(spec, 0, 302) == 0


def test_closed_state_is_deterministic():
    spec = WalkSpec(120, 0.77, 0.6, 0.8, 0.1)
    assert closed_state(spec) == closed_state(spec)
