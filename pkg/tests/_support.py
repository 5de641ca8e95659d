"""Independent reference implementations and shared ensembles for tests.

Nothing here calls the closed-form solvers it is used to check: the
water-fill reference bisects on the level, and the best-response
references sweep dense grids.
"""

import math
import random

import numpy as np

from malice import random_instance

BASE_SEED = 20260809


def bisect_waterfill(slopes, intercepts, mass, iters=200):
    """Reference water-fill found by bisection on the common level."""
    m = len(slopes)
    if mass == 0.0:
        return min(intercepts), [0.0] * m
    cap = min((b for a, b in zip(slopes, intercepts) if a == 0.0), default=math.inf)

    def demand(level):
        return sum(
            (level - b) / a
            for a, b in zip(slopes, intercepts)
            if a > 0.0 and b < level
        )

    def fill(level):
        return [
            (level - b) / a if (a > 0.0 and b < level) else 0.0
            for a, b in zip(slopes, intercepts)
        ]

    if cap < math.inf and demand(cap) <= mass:
        values = fill(cap)
        rest = mass - sum(values)
        ties = [i for i in range(m) if slopes[i] == 0.0 and intercepts[i] == cap]
        for i in ties:
            values[i] = rest / len(ties)
        return cap, values
    lo = min(intercepts)
    hi = max(intercepts) + 1.0
    while demand(hi) < mass:
        hi = 2.0 * hi + 1.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if demand(mid) < mass:
            lo = mid
        else:
            hi = mid
    return hi, fill(hi)


def reference_cost(links, values):
    """Total cost of a single flow, computed from raw pairs."""
    return sum(v * (a * v + b) for (a, b), v in zip(links, values))


def reference_profile_cost(links, x, y):
    """SOC's cost at a raw (x, y) profile."""
    return sum(yi * (a * (xi + yi) + b) for (a, b), xi, yi in zip(links, x, y))


def grid_best_soc_value(links, x, beta, steps=2000):
    """Dense 1-D sweep of SOC's split between two links; returns the min cost."""
    assert len(links) == 2
    best = math.inf
    for k in range(steps + 1):
        y2 = beta * k / steps
        y = (beta - y2, y2)
        best = min(best, reference_profile_cost(links, x, y))
    return best


def grid_best_mal_value(links, y, alpha, steps=2000):
    """Dense 1-D sweep of the adversary's split between two links; returns the max cost."""
    assert len(links) == 2
    best = -math.inf
    for k in range(steps + 1):
        x2 = alpha * k / steps
        x = (alpha - x2, x2)
        best = max(best, reference_profile_cost(links, x, y))
    return best


def standard_ensemble(count, max_m=8):
    """Seeded (instance, alpha) pairs: m <= max_m, coefficients in [0, 10]
    with occasional exact zeros, alpha strictly inside (0, 1)."""
    items = []
    for k in range(count):
        rng = random.Random(BASE_SEED + k)
        m = rng.randint(1, max_m)
        inst = random_instance(seed=BASE_SEED * 1000 + k, m=m)
        alpha = min(max(rng.random(), 1e-9), 1.0 - 1e-9)
        items.append((inst, alpha))
    return items


def oracle_ensemble(count):
    """Seeded (instance, alpha) pairs with m in {2, 3}, small enough to grid."""
    items = []
    for k in range(count):
        rng = random.Random(BASE_SEED + 7919 * (k + 1))
        m = 2 + k % 2
        inst = random_instance(seed=BASE_SEED * 2000 + k, m=m)
        alpha = min(max(rng.random(), 1e-9), 1.0 - 1e-9)
        items.append((inst, alpha))
    return items


def random_feasible(rng: np.random.Generator, count, m, mass):
    """count random flows of the given mass on the m-link simplex."""
    draws = rng.exponential(size=(count, m))
    return mass * draws / draws.sum(axis=1, keepdims=True)


def random_simplex_point(rng: random.Random, m, mass):
    """One random flow of the given mass, as a tuple."""
    draws = [-math.log(1.0 - rng.random()) for _ in range(m)]
    total = sum(draws)
    return tuple(mass * d / total for d in draws)
