"""Brute-force verification of the minimax value on discretized simplices.

Only the outer player is gridded.  The inner optimization is exact in
both directions (the adversary's best response has a closed form, SOC's
is a water-fill), so each direction gives a one-sided bound on the game
value with O(1/n) error:

    soc_mal_value  =  min over gridded y of the exact inner max   >= value
    mal_soc_value  =  max over gridded x of the exact inner min   <= value

Their difference brackets the equilibrium value and shrinks as the
resolution grows; doubling the resolution refines the grid in place, so
the gap never widens.  Grid points are enumerated in lexicographic
order and reductions use strict improvement, so ties resolve to the
lexicographically smallest argument no matter how the evaluation is
partitioned.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import GridTooLarge, InvalidRange
from .flows import waterfill
from .game import _check_alpha
from .model import Instance

DEFAULT_POINT_CAP = 2_000_000


@dataclass(frozen=True)
class GridSpec:
    """Each player's simplex discretized into multiples of mass/resolution."""

    resolution: int
    max_points: int = DEFAULT_POINT_CAP

    def __post_init__(self):
        if not isinstance(self.resolution, int) or self.resolution < 1:
            raise InvalidRange(f"grid resolution must be a positive integer, got {self.resolution}")
        if not isinstance(self.max_points, int) or self.max_points < 1:
            raise InvalidRange(f"grid point cap must be a positive integer, got {self.max_points}")

    def points(self, m: int) -> int:
        """Number of grid points on an m-link simplex."""
        return math.comb(self.resolution + m - 1, m - 1)


def simplex_grid(n: int, m: int):
    """Yield the compositions of n into m nonnegative parts, lexicographically."""
    if m == 1:
        yield (n,)
        return
    for head in range(n + 1):
        for tail in simplex_grid(n - head, m - 1):
            yield (head,) + tail


def _checked_points(inst: Instance, grid: GridSpec) -> int:
    count = grid.points(inst.m)
    if count > grid.max_points:
        raise GridTooLarge(
            f"{count} grid points on {inst.m} links at resolution {grid.resolution} "
            f"exceed the cap {grid.max_points}"
        )
    return count


def soc_mal_value(inst: Instance, alpha: float, grid: GridSpec) -> float:
    """min over gridded SOC strategies of the exact adversarial best response.

    An upper bound on the game value, tight to O(1/resolution).
    """
    alpha = _check_alpha(alpha)
    _checked_points(inst, grid)
    n = grid.resolution
    fractions = np.array(list(simplex_grid(n, inst.m)), dtype=np.float64) / n
    y = (1.0 - alpha) * fractions
    a = np.array(inst.slopes)
    b = np.array(inst.intercepts)
    # all adversarial mass lands on the link maximizing a_k y_k (first
    # index on ties); replace that link's cost term accordingly
    t = np.argmax(y * a, axis=1)
    per_link = y * (y * a + b)
    rows = np.arange(y.shape[0])
    yt = y[rows, t]
    values = per_link.sum(axis=1) - per_link[rows, t] + yt * (a[t] * (alpha + yt) + b[t])
    return float(values.min())


def mal_soc_value(inst: Instance, alpha: float, grid: GridSpec) -> float:
    """max over gridded adversarial strategies of SOC's exact best reply.

    A lower bound on the game value, tight to O(1/resolution).
    """
    alpha = _check_alpha(alpha)
    _checked_points(inst, grid)
    n = grid.resolution
    m = inst.m
    a = inst.slopes
    b = inst.intercepts
    doubled = tuple(2.0 * ai for ai in a)
    beta = 1.0 - alpha
    fractions = [k / n for k in range(n + 1)]
    best = -math.inf
    for comp in simplex_grid(n, m):
        x = [alpha * fractions[k] for k in comp]
        shifted = [a[i] * x[i] + b[i] for i in range(m)]
        _, y = waterfill(doubled, shifted, beta)
        value = 0.0
        for i in range(m):
            yi = y[i]
            if yi != 0.0:
                value += yi * (a[i] * (x[i] + yi) + b[i])
        if value > best:
            best = value
    return best


def minimax_gap(inst: Instance, alpha: float, grid: GridSpec) -> tuple[float, tuple[float, float]]:
    """Bracket the game value from both sides and report the gap.

    Returns (gap, (lower, upper)).  The gap is nonnegative up to float
    noise, and the equilibrium value must lie inside the bracket.
    """
    upper = soc_mal_value(inst, alpha, grid)
    lower = mal_soc_value(inst, alpha, grid)
    return upper - lower, (lower, upper)
