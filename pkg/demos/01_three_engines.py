"""
Three ways to get the same walk
===============================

The state after ``n`` steps can be computed by

* applying the coin-and-shift unitary ``n`` times (``evolve``),
* summing one product of transition factors per trajectory (``sum_over_paths``),
* summing one term per switch group (``closed_state``).

This script runs all three on a biased, phased initial coin and prints how
far apart they are and how long each took.
"""

import math
import time

from qwpath import WalkSpec, closed_state, evolve, sum_over_paths

spec = WalkSpec(n=14, theta=0.9, alpha=0.6, beta=0.8, phi=math.pi / 3)

states = {}
for name, fn in [("evolve", evolve), ("paths", sum_over_paths), ("closed", closed_state)]:
    t0 = time.perf_counter()
    states[name] = fn(spec)
    print(f"{name:>7}: {1e3 * (time.perf_counter() - t0):8.3f} ms")

print()
print("max |evolve - paths| =", states["evolve"].max_abs_diff(states["paths"]))
print("max |evolve - closed| =", states["evolve"].max_abs_diff(states["closed"]))

# a few amplitudes side by side
print()
print(" coin    x   evolve                      closed")
for coin, x in [(0, -14), (1, -2), (0, 0), (1, 6), (1, 14)]:
    print(f"{coin:5d} {x:4d}   {states['evolve'][(coin, x)]:.12f}   {states['closed'][(coin, x)]:.12f}")
