"""
Brute-force sum over histories.

Every extended string gets the product of its one-step factors

    B->B : cos      B->F : sin
    F->B : sin      F->F : -cos

weighted by the initial coin amplitude of its first letter, and the
products are summed per terminal ``(coin, x)``. Cost is ``2**(n+1)``
strings, so this engine is an oracle for small ``n`` only.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, NamedTuple

import numpy as np

from .core import B, F, StateVector, SwitchGroup, WalkSpec, coin_entries

__all__ = [
    "DEFAULT_CAP",
    "MAX_CAP",
    "EnumerationCapError",
    "GroupInconsistency",
    "TransitionRule",
    "transition_rules",
    "path_amplitude",
    "sum_over_paths",
    "enumerate_groups",
    "iter_strings",
]

DEFAULT_CAP = 20
MAX_CAP = 26
_CHUNK_BITS = 16


class EnumerationCapError(ValueError):
    """Raised when an enumeration would exceed the step cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(
            f"path enumeration is capped at n <= {cap} (2**(n+1) strings); got n = {n}"
        )
        self.n = n
        self.cap = cap


class GroupInconsistency(AssertionError):
    """A switch group whose members disagree on sign or final coin."""


class TransitionRule(NamedTuple):
    from_letter: str
    to_letter: str
    factor: float


def transition_rules(theta: float) -> dict[tuple[str, str], TransitionRule]:
    c, s = coin_entries(theta)
    rules = [
        TransitionRule(B, B, c),
        TransitionRule(B, F, s),
        TransitionRule(F, B, s),
        TransitionRule(F, F, -c),
    ]
    return {(r.from_letter, r.to_letter): r for r in rules}


def path_amplitude(s: str, theta: float) -> float:
    """Product of one-step factors along the extended string ``s``."""
    rules = transition_rules(theta)
    amp = 1.0
    for a, b in zip(s, s[1:]):
        amp *= rules[(a, b)].factor
    return amp


def _check_cap(n: int, cap: int):
    if cap > MAX_CAP:
        raise ValueError(f"cap may not exceed {MAX_CAP}, got {cap}")
    if n > cap:
        raise EnumerationCapError(n, cap)
    if n > DEFAULT_CAP:
        warnings.warn(
            f"enumerating 2**{n + 1} paths; this is slow and memory hungry",
            RuntimeWarning,
            stacklevel=3,
        )


def _chunks(n: int) -> list[tuple[int, int]]:
    """Contiguous index ranges (a fixed prefix each) in lexicographic order."""
    total = 1 << (n + 1)
    size = min(total, 1 << _CHUNK_BITS)
    return [(start, start + size) for start in range(0, total, size)]


def _letters(n: int, start: int, stop: int) -> np.ndarray:
    """Rows are extended strings, 0 = B and 1 = F, first letter in column 0."""
    idx = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(n, -1, -1, dtype=np.int64)
    return ((idx[:, None] >> shifts) & 1).astype(np.int8)


def _pair_codes(letters: np.ndarray) -> np.ndarray:
    # 0: B->B, 1: B->F, 2: F->B, 3: F->F
    return 2 * letters[:, :-1] + letters[:, 1:]


def _chunk_sums(n: int, factors: np.ndarray, span: tuple[int, int]) -> np.ndarray:
    letters = _letters(n, *span)
    codes = _pair_codes(letters)
    amp = np.ones(letters.shape[0])
    for k in range(n):
        amp *= factors[codes[:, k]]
    x = 2 * letters[:, 1:].sum(axis=1, dtype=np.int64) - n
    coin = letters[:, -1].astype(np.int64)
    first = letters[:, 0].astype(np.int64)
    width = 2 * n + 1
    index = (first * 2 + coin) * width + (x + n)
    sums = np.bincount(index, weights=amp, minlength=4 * width)
    return sums.reshape(2, 2, width)


def sum_over_paths(spec: WalkSpec, cap: int = DEFAULT_CAP, workers: int | None = None) -> StateVector:
    """
    State at step ``n`` as an explicit sum over all ``2**(n+1)`` extended strings.

    Strings are visited in lexicographic order (``B < F``) and summed
    sequentially within fixed-prefix chunks; chunk totals are combined in
    prefix order, so the result does not depend on ``workers``.

    Raises
    ------
    EnumerationCapError
        If ``spec.n`` exceeds ``cap``.
    """
    n = spec.n
    _check_cap(n, cap)
    c, s = coin_entries(spec.theta)
    factors = np.array([c, s, s, -c])
    spans = _chunks(n)
    if workers and workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda sp: _chunk_sums(n, factors, sp), spans))
    else:
        parts = [_chunk_sums(n, factors, sp) for sp in spans]
    totals = parts[0]
    for part in parts[1:]:
        totals = totals + part
    # totals[first_letter, final_coin, column]
    amps = spec.coin0 * totals[0] + spec.coin1 * totals[1]
    return StateVector(n, amps)


def iter_strings(n: int) -> Iterator[str]:
    """All extended strings of an ``n``-step walk in lexicographic order."""
    for i in range(1 << (n + 1)):
        yield "".join(F if (i >> (n - k)) & 1 else B for k in range(n + 1))


def enumerate_groups(n: int, cap: int = DEFAULT_CAP) -> list[SwitchGroup]:
    """
    Bucket every extended string by ``(first letter, switches, endpoint)``.

    Each bucket must be homogeneous in sign ``(-1)**(#F->F)`` and in final
    coin; a mixed bucket raises :class:`GroupInconsistency`.
    """
    _check_cap(n, cap)
    width = 2 * n + 1
    counts: dict[int, int] = {}
    signature: dict[int, int] = {}
    for span in _chunks(n):
        letters = _letters(n, *span)
        codes = _pair_codes(letters)
        j = ((codes == 1) | (codes == 2)).sum(axis=1, dtype=np.int64)
        ff = (codes == 3).sum(axis=1, dtype=np.int64)
        x = 2 * letters[:, 1:].sum(axis=1, dtype=np.int64) - n
        first = letters[:, 0].astype(np.int64)
        key = (first * (n + 1) + j) * width + (x + n)
        sig = (ff % 2) * 2 + letters[:, -1]
        keys, inverse, mult = np.unique(key, return_inverse=True, return_counts=True)
        lo = np.full(keys.shape, 4, dtype=np.int64)
        hi = np.full(keys.shape, -1, dtype=np.int64)
        np.minimum.at(lo, inverse, sig)
        np.maximum.at(hi, inverse, sig)
        for k, m, a, b in zip(keys.tolist(), mult.tolist(), lo.tolist(), hi.tolist()):
            if a != b or signature.get(k, a) != a:
                raise GroupInconsistency(f"mixed sign/final coin in group key {k}")
            signature[k] = a
            counts[k] = counts.get(k, 0) + m
    groups = []
    for k in sorted(counts):
        rest, xi = divmod(k, width)
        first, j = divmod(rest, n + 1)
        sig = signature[k]
        groups.append(SwitchGroup(
            c=F if first else B,
            j=j,
            x=xi - n,
            multiplicity=counts[k],
            parity=-1 if sig >> 1 else 1,
            final_coin=sig & 1,
        ))
    return groups
