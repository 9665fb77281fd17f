"""
Counting trajectories by switches
=================================

A trajectory is a string of B (left) and F (right) moves, preceded by a
letter for the initial coin. Its amplitude is

    (-1)**(number of FF pairs) * cos**(n - j) * sin**j

where ``j`` is the number of letter changes ("switches"). Strings with the
same first letter, endpoint and ``j`` share sign and final coin, so they
can be counted instead of enumerated.
"""

from collections import defaultdict

from qwpath import enumerate_groups, eta, switch_groups, total_paths
from qwpath.core import endpoint, ff_transitions, switches
from qwpath.pathsum import iter_strings

n = 4

print(f"extended strings of a {n}-step walk ending at x = 0")
by_group = defaultdict(list)
for s in iter_strings(n):
    if endpoint(s) == 0:
        by_group[(s[0], switches(s))].append(s)
for (c, j), members in sorted(by_group.items()):
    signs = {(-1) ** ff_transitions(m) for m in members}
    print(f"  first={c} j={j}: {', '.join(members):30s} sign={signs}")

print()
print("the same groups from closed-form counts")
for g in switch_groups(n, 0):
    print(f"  first={g.c} j={g.j}: multiplicity={g.multiplicity} sign={g.parity:+d} final coin={g.final_coin}")

print()
print("plain strings: switch-resolved counts add up to C(n, (n+x)/2)")
for n in (6, 10, 30):
    x = 2 if n % 2 == 0 else 1
    counts = [eta(n, x, j) for j in range(n)]
    print(f"  n={n:2d} x={x}: sum={sum(counts)}  C={total_paths(n, x)}")

print()
print("every enumerated group agrees with the formulas up to n = 12:",
      all(set(enumerate_groups(m)) == set(switch_groups(m)) for m in range(13)))
