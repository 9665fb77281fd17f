"""
Closed-form amplitudes from switch groups.

The amplitude of ``(coin, x)`` after ``n`` steps is

    sum over groups (c, j, x) with final coin ``coin`` of
        a_c * multiplicity * sign * cos**(n - j) * sin**j

with ``a_B = alpha`` and ``a_F = beta e^{i phi}``. There are O(n) groups
per position and O(n^2) in total, against ``2**(n+1)`` paths.

Group terms grow like ``2**(n/2)`` and alternate in sign while the
amplitudes stay below one, so double-precision accumulation fails for
``n`` beyond a few dozen. The group sums are instead accumulated exactly as
integers in fixed point: ``cos`` and ``sin`` are dyadic rationals once
rounded to doubles, so every power can be taken to ``n + 80`` fractional
bits and the only loss is one final rounding per amplitude.
"""

from __future__ import annotations

import math
from operator import mul
from typing import NamedTuple

import numpy as np

from .combinatorics import extended_count, final_coin, parity_sign
from .core import B, F, Scaled, StateVector, WalkSpec, coin_entries

__all__ = [
    "GroupTerm",
    "component_amplitude",
    "group_sums",
    "closed_state",
    "closed_amplitude",
]

_GUARD_BITS = 80


class GroupTerm(NamedTuple):
    """Real contribution of one switch group, before the initial-coin weight."""

    c: str
    j: int
    x: int
    coin: int
    value: float


def component_amplitude(c: str, n: int, x: int, j: int, theta: float) -> GroupTerm:
    """
    ``multiplicity * sign * cos**(n-j) * sin**j`` for the group ``(c, j, x)``.

    Evaluated with a tracked binary exponent so that large multiplicities and
    small trigonometric powers never over- or underflow on their own. Empty
    groups give a zero term.
    """
    count = extended_count(c, n, x, j)
    coin = final_coin(c, j)
    if count == 0:
        return GroupTerm(c, j, x, coin, 0.0)
    cos_t, sin_t = coin_entries(theta)
    term = Scaled.from_int(count) * Scaled(cos_t) ** (n - j) * Scaled(sin_t) ** j
    return GroupTerm(c, j, x, coin, parity_sign(c, n, x, j) * float(term))


def _fixed_powers(n: int, theta: float, bits: int) -> list[int]:
    """``floor(cos**(n-j) * sin**j * 2**bits)`` for ``j = 0..n``."""
    cos_t, sin_t = coin_entries(theta)
    cn, cd = cos_t.as_integer_ratio()
    sn, sd = sin_t.as_integer_ratio()
    ce, se = cd.bit_length() - 1, sd.bit_length() - 1
    cpow = [1] * (n + 1)
    spow = [1] * (n + 1)
    for k in range(1, n + 1):
        cpow[k] = cpow[k - 1] * cn
        spow[k] = spow[k - 1] * sn
    out = []
    for j in range(n + 1):
        shift = bits - (n - j) * ce - j * se
        num = cpow[n - j] * spow[j]
        out.append(num << shift if shift >= 0 else num >> -shift)
    return out


def _alternating(products: list[int], first_sign: int) -> int:
    total = sum(products[0::2]) - sum(products[1::2])
    return total if first_sign > 0 else -total


def _position_sums(n: int, x: int, rows, powers: list[int]) -> tuple[int, int, int, int]:
    """
    Fixed-point group sums at ``x``: (B -> coin 0, B -> coin 1, F -> coin 0, F -> coin 1).

    ``rows(N)`` returns ``[C(N, 0), ..., C(N, N)]``.
    """
    nf, nb = (n + x) // 2, (n - x) // 2
    out = []
    for c in (B, F):
        own, other = (nb, nf) if c == B else (nf, nb)
        # own: letters of type c beyond the leading one; the first block
        # therefore has own + 1 letters to share
        row_own = rows(own)
        row_other = rows(other - 1) if other else []
        # odd j = 2m - 1, m >= 1: C(own, m-1) C(other-1, m-1)
        odd = list(map(mul, map(mul, row_own, row_other), powers[1::2]))
        # even j = 2m, m >= 1: C(own, m) C(other-1, m-1)
        even = list(map(mul, map(mul, row_own[1:], row_other), powers[2::2]))
        if c == B:
            # sign (-1)**(nf - m) in both classes
            odd_sum = _alternating(odd, (-1) ** (nf - 1))
            even_sum = _alternating(even, (-1) ** (nf - 1))
            if other == 0:
                even_sum += powers[0]
            out += [even_sum, odd_sum]
        else:
            # odd: (-1)**(nf + 1 - m); even: (-1)**(nf - m)
            odd_sum = _alternating(odd, (-1) ** nf)
            even_sum = _alternating(even, (-1) ** (nf - 1))
            if other == 0:
                even_sum += (-1) ** nf * powers[0]
            out += [odd_sum, even_sum]
    return tuple(out)


def _pascal(n: int) -> list[list[int]]:
    rows = [[1]]
    for _ in range(n):
        prev = rows[-1]
        rows.append([1, *map(sum, zip(prev, prev[1:])), 1])
    return rows


def group_sums(n: int, theta: float) -> np.ndarray:
    """
    Real group sums ``S[c, coin, i]`` for ``c`` in (B, F) and ``x = i - n``.

    Amplitudes follow as ``alpha * S[0] + beta e^{i phi} * S[1]``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    bits = n + _GUARD_BITS
    powers = _fixed_powers(n, theta, bits)
    triangle = _pascal(n)
    scale = 1 << bits
    out = np.zeros((2, 2, 2 * n + 1))
    for x in range(-n, n + 1, 2):
        b0, b1, f0, f1 = _position_sums(n, x, triangle.__getitem__, powers)
        i = x + n
        out[0, 0, i] = b0 / scale
        out[0, 1, i] = b1 / scale
        out[1, 0, i] = f0 / scale
        out[1, 1, i] = f1 / scale
    return out


def closed_state(spec: WalkSpec) -> StateVector:
    """State after ``spec.n`` steps assembled from switch-group sums."""
    sums = group_sums(spec.n, spec.theta)
    return StateVector(spec.n, spec.coin0 * sums[0] + spec.coin1 * sums[1])


def closed_amplitude(spec: WalkSpec, coin: int, x: int) -> complex:
    """Single amplitude ``<coin, x|psi(n)>`` in O(n) big-integer operations."""
    n = spec.n
    if abs(x) > n or (n - x) % 2:
        return 0j
    bits = n + _GUARD_BITS
    powers = _fixed_powers(n, spec.theta, bits)
    b0, b1, f0, f1 = _position_sums(
        n, x, lambda m: [math.comb(m, k) for k in range(m + 1)], powers
    )
    scale = 1 << bits
    from_b, from_f = (b0, f0) if coin == 0 else (b1, f1)
    return spec.coin0 * (from_b / scale) + spec.coin1 * (from_f / scale)
