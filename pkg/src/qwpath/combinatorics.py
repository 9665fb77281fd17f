"""
Exact counting of walk strings by switches, sign and final coin.

A string with ``j`` switches splits into ``j + 1`` maximal blocks that
alternate between the two letters, starting with the first letter. Filling
``N`` letters of one kind into ``k`` non-empty blocks is a strong
composition, counted by ``C(N - 1, k - 1)``.

Positions are signed: a walk ending at ``x`` after ``n`` steps made
``(n + x) / 2`` forward and ``(n - x) / 2`` backward moves.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .core import B, F, SwitchGroup, binomial, compositions

__all__ = [
    "ShiftCounts",
    "shift_counts",
    "total_paths",
    "eta",
    "eta_identity_check",
    "eta_star",
    "extended_count",
    "parity_sign",
    "final_coin",
    "switch_groups",
]


class ShiftCounts(NamedTuple):
    n_forward: int
    n_backward: int


def _reachable(n: int, x: int) -> bool:
    return n >= 0 and abs(x) <= n and (n - x) % 2 == 0


def shift_counts(n: int, x: int) -> ShiftCounts:
    if not _reachable(n, x):
        raise ValueError(f"position {x} is not reachable in {n} steps")
    return ShiftCounts((n + x) // 2, (n - x) // 2)


def _check_letter(c: str):
    if c not in (B, F):
        raise ValueError(f"initial letter must be 'B' or 'F', got {c!r}")


def _blocks(j: int) -> tuple[int, int]:
    """Blocks of (first letter, other letter) in a string with ``j`` switches."""
    return (j + 2) // 2, (j + 1) // 2


def total_paths(n: int, x: int) -> int:
    """Number of ``n``-letter strings ending at ``x``; zero if unreachable."""
    if not _reachable(n, x):
        return 0
    return binomial(n, (n + x) // 2)


def eta(n: int, x: int, j: int) -> int:
    """
    Number of ``n``-letter (non-extended) strings ending at ``x`` with ``j``
    switches: B-first plus F-first block compositions.

    ``j = 0`` is allowed and counts the single constant string when ``|x| = n``.
    """
    if j < 0:
        raise ValueError(f"switch count must be non-negative, got {j}")
    if not _reachable(n, x) or n == 0:
        return 0
    nf, nb = shift_counts(n, x)
    lead, other = _blocks(j)
    return (compositions(nb, lead) * compositions(nf, other)
            + compositions(nf, lead) * compositions(nb, other))


def eta_identity_check(n: int, x: int) -> bool:
    """Whether the switch-resolved counts at ``(n, x)`` add up to ``C(n, (n+x)/2)``."""
    if not _reachable(n, x):
        raise ValueError(f"position {x} is not reachable in {n} steps")
    if n == 0:
        return total_paths(0, 0) == 1
    return sum(eta(n, x, j) for j in range(n)) == total_paths(n, x)


def extended_count(c: str, n: int, x: int, j: int) -> int:
    """
    Number of ``(n+1)``-letter extended strings with first letter ``c``,
    endpoint ``x`` and ``j`` switches (leading letter included).
    """
    _check_letter(c)
    if j < 0 or not _reachable(n, x):
        return 0
    nf, nb = shift_counts(n, x)
    own, other = (nb + 1, nf) if c == B else (nf + 1, nb)
    lead, trail = _blocks(j)
    return compositions(own, lead) * compositions(other, trail)


def eta_star(n: int, x: int, j: int) -> int:
    """Extended-string count summed over both initial letters."""
    return extended_count(B, n, x, j) + extended_count(F, n, x, j)


def parity_sign(c: str, n: int, x: int, j: int) -> int:
    """
    ``(-1)**(#F->F)`` shared by every extended string in the group.

    Each maximal F block of length ``L`` holds ``L - 1`` F->F pairs, so the
    count is (F letters) - (F blocks).

    Raises
    ------
    ValueError
        If the group is empty.
    """
    if extended_count(c, n, x, j) == 0:
        raise ValueError(f"empty group (c={c}, n={n}, x={x}, j={j})")
    nf = (n + x) // 2
    lead, trail = _blocks(j)
    if c == F:
        f_letters, f_blocks = nf + 1, lead
    else:
        f_letters, f_blocks = nf, trail
    return -1 if (f_letters - f_blocks) % 2 else 1


def final_coin(c: str, j: int) -> int:
    """Coin after the last move: the letter closing the last block."""
    _check_letter(c)
    return j % 2 if c == B else (j + 1) % 2


def switch_groups(n: int, x: int | None = None) -> Iterator[SwitchGroup]:
    """
    Non-empty groups of an ``n``-step walk, ordered by ``x``, then ``c``
    (B before F), then ``j``. Restrict to one endpoint with ``x``.
    """
    xs = range(-n, n + 1, 2) if x is None else [x]
    for xx in xs:
        if not _reachable(n, xx):
            continue
        for c in (B, F):
            for j in range(n - abs(xx) + 2):
                m = extended_count(c, n, xx, j)
                if m:
                    yield SwitchGroup(c, j, xx, m, parity_sign(c, n, xx, j), final_coin(c, j))
