"""Step-by-step unitary evolution: the reference engine."""

from __future__ import annotations

import numpy as np

from .core import StateVector, WalkSpec, coin_entries

__all__ = ["initial_state", "step", "evolve", "distribution"]


def initial_state(spec: WalkSpec) -> StateVector:
    """Walker at the origin with coin ``alpha|0> + e^{i phi} beta|1>``."""
    return StateVector(0, [[spec.coin0], [spec.coin1]])


def step(state: StateVector, theta: float) -> StateVector:
    """
    Apply one coin toss followed by the conditional shift.

    ``(0, k)`` with amplitude ``a`` feeds ``a cos`` into ``(0, k-1)`` and
    ``a sin`` into ``(1, k+1)``; ``(1, k)`` with amplitude ``b`` feeds
    ``b sin`` into ``(0, k-1)`` and ``-b cos`` into ``(1, k+1)``.
    """
    c, s = coin_entries(theta)
    a0, a1 = state.amplitudes
    width = a0.shape[0]
    out = np.zeros((2, width + 2), dtype=np.complex128)
    # column i (x = i - t) lands on column i (x - 1 at t + 1) or i + 2 (x + 1)
    out[0, :width] = c * a0 + s * a1
    out[1, 2:] = s * a0 - c * a1
    return StateVector(state.step + 1, out)


def evolve(spec: WalkSpec) -> StateVector:
    """State after ``spec.n`` steps, O(n^2) time and O(n) memory."""
    state = initial_state(spec)
    for _ in range(spec.n):
        state = step(state, spec.theta)
    return state


def distribution(state: StateVector) -> dict[int, float]:
    """Position probabilities summed over the coin."""
    return {int(x): float(p) for x, p in zip(state.positions, state.probabilities())}
