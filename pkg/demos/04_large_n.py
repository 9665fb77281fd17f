"""
Large walks and cancellation
============================

Individual switch-group terms grow like ``2**(n/2)`` and alternate in sign,
while amplitudes never exceed one. Summing the terms as doubles therefore
loses everything for moderate ``n``. ``closed_state`` accumulates them
exactly as fixed-point integers; this script shows both.
"""

import math
import time

from qwpath import WalkSpec, closed_state, component_amplitude, evolve, switch_groups

n, x, theta = 500, 0, math.pi / 4

terms = [component_amplitude(g.c, n, x, g.j, theta).value
         for g in switch_groups(n, x) if g.c == "B" and g.final_coin == 0]
print(f"n={n}, x={x}: {len(terms)} groups, largest |term| = {max(map(abs, terms)):.3e}")
print(f"  double-precision fsum of terms: {math.fsum(terms):.6e}")
state = closed_state(WalkSpec(n, theta))
print(f"  exact accumulation:             {state[(0, x)].real:.15f}")
print(f"  step-by-step evolution:         {evolve(WalkSpec(n, theta))[(0, x)].real:.15f}")

print()
for n in (100, 250, 500, 1000):
    spec = WalkSpec(n, theta)
    t0 = time.perf_counter()
    closed = closed_state(spec)
    t_closed = time.perf_counter() - t0
    t0 = time.perf_counter()
    ref = evolve(spec)
    t_evolve = time.perf_counter() - t0
    print(f"n={n:5d}: closed {t_closed:6.3f} s, evolve {t_evolve:6.3f} s, "
          f"max diff {closed.max_abs_diff(ref):.1e}, norm error {abs(closed.norm_squared() - 1):.1e}")
