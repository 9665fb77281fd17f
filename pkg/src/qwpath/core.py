"""
Shared domain types for the walk engines.

A walk starts at the origin with coin state ``alpha|0> + e^{i phi} beta|1>``
and is driven by the one-parameter coin

    C(theta) = [[cos theta,  sin theta],
                [sin theta, -cos theta]]

followed by the conditional shift (coin 0 moves left, coin 1 moves right).
Trajectories are written as strings over ``{"B", "F"}``; an *extended* string
carries one extra leading letter for the initial coin (``B`` for ``|0>``,
``F`` for ``|1>``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

__all__ = [
    "B",
    "F",
    "NORM_TOL",
    "WalkSpec",
    "StateVector",
    "SwitchGroup",
    "Scaled",
    "binomial",
    "compositions",
    "coin_entries",
    "parse_string",
    "endpoint",
    "switches",
    "ff_transitions",
    "last_coin",
]

B = "B"
F = "F"

NORM_TOL = 1e-12

ExtendedString = str


@dataclass(frozen=True)
class WalkSpec:
    """
    Parameters of an ``n``-step walk.

    Parameters
    ----------
    n : int
        Number of steps.
    theta : float
        Coin angle in radians.
    alpha, beta : float
        Real initial amplitudes of coin 0 and coin 1.
    phi : float
        Relative phase applied to the coin-1 amplitude.
    """

    n: int
    theta: float = math.pi / 4
    alpha: float = 1.0
    beta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)):
            raise TypeError(f"n must be an integer, got {type(self.n).__name__}")
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        for name in ("theta", "alpha", "beta", "phi"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        norm = self.alpha ** 2 + self.beta ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(
                f"initial coin state is not normalized: alpha^2 + beta^2 = {norm!r}"
            )

    @property
    def coin0(self) -> complex:
        """Initial amplitude attached to a leading ``B``."""
        return complex(self.alpha)

    @property
    def coin1(self) -> complex:
        """Initial amplitude attached to a leading ``F``."""
        return self.beta * complex(math.cos(self.phi), math.sin(self.phi))

    def replace(self, **changes) -> "WalkSpec":
        fields = dict(n=self.n, theta=self.theta, alpha=self.alpha,
                      beta=self.beta, phi=self.phi)
        fields.update(changes)
        return WalkSpec(**fields)

    def as_dict(self) -> dict:
        return dict(n=int(self.n), theta=self.theta, alpha=self.alpha,
                    beta=self.beta, phi=self.phi)


class StateVector:
    """
    Walker state at a given step.

    Amplitudes live in a dense ``(2, 2*step + 1)`` complex array; column ``i``
    holds position ``x = i - step`` and row ``b`` holds coin ``b``. Only
    positions with ``x = step (mod 2)`` can be occupied.
    """

    __slots__ = ("step", "amplitudes")

    def __init__(self, step: int, amplitudes):
        amplitudes = np.array(amplitudes, dtype=np.complex128)
        if step < 0:
            raise ValueError("step must be non-negative")
        if amplitudes.shape != (2, 2 * step + 1):
            raise ValueError(
                f"amplitudes must have shape (2, {2 * step + 1}), got {amplitudes.shape}"
            )
        if not np.all(np.isfinite(amplitudes)):
            raise ValueError("amplitudes must be finite")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "step", int(step))
        object.__setattr__(self, "amplitudes", amplitudes)

    def __setattr__(self, name, value):
        raise AttributeError("StateVector is immutable")

    @classmethod
    def from_entries(cls, step: int, entries: Mapping[tuple[int, int], complex]) -> "StateVector":
        amps = np.zeros((2, 2 * step + 1), dtype=np.complex128)
        for (coin, x), value in entries.items():
            if coin not in (0, 1):
                raise ValueError(f"coin must be 0 or 1, got {coin}")
            if abs(x) > step or (x - step) % 2:
                raise ValueError(f"position {x} is unreachable at step {step}")
            amps[coin, x + step] += value
        return cls(step, amps)

    @property
    def positions(self) -> np.ndarray:
        """Reachable positions ``-step, -step + 2, ..., step``."""
        return np.arange(-self.step, self.step + 1, 2)

    def __getitem__(self, key: tuple[int, int]) -> complex:
        coin, x = key
        if abs(x) > self.step:
            return 0j
        return complex(self.amplitudes[coin, x + self.step])

    def entries(self, nonzero: bool = False) -> dict[tuple[int, int], complex]:
        """Map ``(coin, x)`` to amplitude for every reachable basis state."""
        out = {}
        for x in self.positions:
            for coin in (0, 1):
                value = complex(self.amplitudes[coin, x + self.step])
                if nonzero and value == 0:
                    continue
                out[(coin, int(x))] = value
        return out

    def __iter__(self) -> Iterator[tuple[int, int, complex]]:
        """Yield ``(coin, x, amplitude)`` sorted by ``(x, coin)``."""
        for (coin, x), value in self.entries().items():
            yield coin, x, value

    def probabilities(self) -> np.ndarray:
        """Position probabilities, aligned with :attr:`positions`."""
        p = np.abs(self.amplitudes) ** 2
        return (p[0] + p[1])[:: 2]

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def max_abs_diff(self, other: "StateVector") -> float:
        if self.step != other.step:
            raise ValueError(f"step mismatch: {self.step} vs {other.step}")
        return float(np.max(np.abs(self.amplitudes - other.amplitudes)))

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.step == other.step and np.array_equal(self.amplitudes, other.amplitudes)

    __hash__ = None

    def __repr__(self):
        shown = ", ".join(
            f"({c},{x}): {v:.6g}" for (c, x), v in self.entries(nonzero=True).items()
        )
        return f"StateVector(step={self.step}, {{{shown}}})"


@dataclass(frozen=True)
class SwitchGroup:
    """
    Extended strings sharing initial letter ``c``, switch count ``j`` and
    endpoint ``x``. Every member has the same sign and final coin.
    """

    c: str
    j: int
    x: int
    multiplicity: int
    parity: int
    final_coin: int


def binomial(m: int, k: int) -> int:
    """Exact ``C(m, k)``; zero outside ``0 <= k <= m``."""
    if m < 0:
        raise ValueError(f"binomial requires m >= 0, got {m}")
    if k < 0 or k > m:
        return 0
    return math.comb(m, k)


def compositions(total: int, parts: int) -> int:
    """Number of ways to write ``total`` as an ordered sum of ``parts`` positive integers."""
    if parts == 0:
        return 1 if total == 0 else 0
    if parts < 0 or total < parts:
        return 0
    return math.comb(total - 1, parts - 1)


_SQRT_HALF = math.sqrt(0.5)
# (cos, sin) at k * pi/4, k = 0..7
_EIGHTHS = [
    (1.0, 0.0), (_SQRT_HALF, _SQRT_HALF), (0.0, 1.0), (-_SQRT_HALF, _SQRT_HALF),
    (-1.0, 0.0), (-_SQRT_HALF, -_SQRT_HALF), (0.0, -1.0), (_SQRT_HALF, -_SQRT_HALF),
]


def coin_entries(theta: float) -> tuple[float, float]:
    """
    ``(cos theta, sin theta)`` with exact values at multiples of pi/4.

    Every engine takes its coin entries from here, so degenerate walks
    (theta = 0, pi/2) see exact zeros and the Hadamard coin is symmetric.
    """
    k = theta / (math.pi / 4)
    r = round(k)
    if abs(k - r) <= 1e-13 * max(1.0, abs(k)):
        return _EIGHTHS[r % 8]
    return math.cos(theta), math.sin(theta)


def parse_string(text: str) -> ExtendedString:
    """Normalize ``"F*BBFFB"`` or ``"FBBFFB"`` to a bare letter string."""
    s = text.replace("*", "").replace(" ", "").upper()
    if not s or set(s) - {B, F}:
        raise ValueError(f"not a B/F string: {text!r}")
    return s


def endpoint(s: ExtendedString) -> int:
    """Terminal position: forward minus backward moves over the transition letters."""
    if not s:
        raise ValueError("empty string")
    moves = s[1:]
    return moves.count(F) - moves.count(B)


def switches(s: ExtendedString) -> int:
    """Adjacent unequal letter pairs, the leading coin letter included."""
    if not s:
        raise ValueError("empty string")
    return sum(a != b for a, b in zip(s, s[1:]))


def ff_transitions(s: ExtendedString) -> int:
    return sum(a == F and b == F for a, b in zip(s, s[1:]))


def last_coin(s: ExtendedString) -> int:
    return 0 if s[-1] == B else 1


class Scaled:
    """
    Real number kept as ``mantissa * 2**exponent`` with ``0.5 <= |mantissa| < 1``.

    Used for single closed-form terms, where a big-integer multiplicity meets
    high powers of cos/sin and the intermediate factors over- or underflow
    a double even though the product does not.
    """

    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa: float, exponent: int = 0):
        m, e = math.frexp(mantissa)
        self.mantissa = m
        self.exponent = e + exponent if m else 0

    @classmethod
    def from_int(cls, value: int) -> "Scaled":
        shift = max(0, abs(value).bit_length() - 60)
        if shift:
            # round-to-nearest on the discarded bits
            value = (value + (1 << (shift - 1))) >> shift if value > 0 else -((-value + (1 << (shift - 1))) >> shift)
        return cls(float(value), shift)

    def __mul__(self, other: "Scaled") -> "Scaled":
        return Scaled(self.mantissa * other.mantissa, self.exponent + other.exponent)

    def __pow__(self, k: int) -> "Scaled":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = Scaled(1.0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __float__(self) -> float:
        if not self.mantissa:
            return 0.0
        if self.exponent > 1024:
            raise OverflowError(f"2**{self.exponent} does not fit in a double")
        return math.ldexp(self.mantissa, self.exponent)

    def __repr__(self):
        return f"Scaled({self.mantissa!r}, {self.exponent})"
