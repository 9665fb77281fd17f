"""
The Hadamard walk spreads ballistically
=======================================

With theta = pi/4 and the walker starting in coin 0, the position
distribution after ``n`` steps has two peaks near ``x = +-n/sqrt(2)`` and
almost no weight beyond them. A classical random walk would instead stay
within a few multiples of ``sqrt(n)``.
"""

import math

import numpy as np

from qwpath import WalkSpec, closed_state, evolve

n = 100
state = evolve(WalkSpec(n, math.pi / 4, 1.0, 0.0, 0.0))
x, p = state.positions, state.probabilities()

print(f"n = {n}, total probability = {p.sum():.15f}")
print(f"mass with |x| <= 0.75 n: {p[np.abs(x) <= 0.75 * n].sum():.6f}")
print(f"standard deviation: {math.sqrt((p * x ** 2).sum() - (p * x).sum() ** 2):.2f}"
      f" (classical: {math.sqrt(n):.2f})")
print(f"left peak at x = {x[np.argmax(np.where(x < 0, p, 0))]},"
      f" right peak at x = {x[np.argmax(np.where(x > 0, p, 0))]},"
      f" n/sqrt(2) = {n / math.sqrt(2):.1f}")

print()
width = 60
for xi, pi in zip(x[::4], p[::4]):
    bar = "#" * int(round(width * pi / p.max()))
    print(f"{xi:5d} {bar}")

# the closed form reproduces it position by position
print()
print("max |evolve - closed| =", closed_state(WalkSpec(n, math.pi / 4)).max_abs_diff(state))
