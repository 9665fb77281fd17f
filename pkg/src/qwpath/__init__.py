"""Discrete-time quantum walk on the line: unitary evolution, path sums and closed form."""

from .closedform import closed_amplitude, closed_state, component_amplitude, group_sums
from .combinatorics import (
    eta,
    eta_identity_check,
    eta_star,
    extended_count,
    final_coin,
    parity_sign,
    switch_groups,
    total_paths,
)
from .core import (
    B,
    F,
    StateVector,
    SwitchGroup,
    WalkSpec,
    binomial,
    coin_entries,
    endpoint,
    switches,
)
from .evolver import distribution, evolve, initial_state, step
from .pathsum import enumerate_groups, path_amplitude, sum_over_paths

__version__ = "0.1.0"
