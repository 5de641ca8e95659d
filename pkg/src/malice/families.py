"""Named instance families, random ensembles, and cost-of-malice sweeps."""

import math
import random
from dataclasses import dataclass

from .errors import InvalidAlpha, InvalidM, InvalidRange, NonPositiveM
from .flows import flow_cost, induced_optimum, system_optimum
from .game import com_report
from .model import Flow, Instance, cost, validate


def pigou() -> Instance:
    """Two links, one constant at latency 1 and one growing as its own load."""
    return validate([(0.0, 1.0), (1.0, 0.0)])


def tight(M: float) -> Instance:
    """Two links with latencies 1 and M*z; stresses the scaled-optimum bound."""
    M = float(M)
    if not math.isfinite(M) or M <= 0.0:
        raise NonPositiveM(f"slope parameter must be positive, got {M}")
    return validate([(0.0, 1.0), (M, 0.0)])


NETWORK_DEMO_NOTE = (
    "SOC is restricted to the parallel links; the spanning path sums all "
    "link latencies and is never the better choice for SOC when m >= 2."
)


def network_demo(m: int, alpha: float) -> tuple[float, dict]:
    """Lower bound on cost of malice for m unit-slope links plus a spanning path.

    The adversary rides the extra path that traverses every link, adding
    alpha load to each, and SOC best-responds on the parallel links.  The
    resulting ratio (1 - alpha) + alpha * m grows linearly in m, showing
    the bounded-ratio behavior of pure parallel links does not survive
    even one extra path.  This is a lower bound only; no claim is made
    that the adversary's path strategy is optimal.
    """
    if not isinstance(m, int) or m < 1:
        raise InvalidM(f"link count must be a positive integer, got {m}")
    alpha = float(alpha)
    if not math.isfinite(alpha) or not 0.0 <= alpha < 1.0:
        raise InvalidAlpha(f"alpha must lie in [0, 1), got {alpha}")
    inst = validate([(1.0, 0.0)] * m)
    loads = [alpha] * m
    total = 0.0
    for v in loads:
        total += v
    x = Flow(tuple(loads), total)
    y, _ = induced_optimum(inst, x, 1.0 - alpha)
    soc_cost = cost(inst, x, y)
    opt_cost_1 = flow_cost(inst, system_optimum(inst, 1.0)[0])
    baseline = (1.0 - alpha) * opt_cost_1
    bound = soc_cost / baseline
    report = {
        "m": m,
        "alpha": alpha,
        "soc_cost": soc_cost,
        "parallel_opt_cost": opt_cost_1,
        "baseline": baseline,
        "com_lower_bound": bound,
        "closed_form": (1.0 - alpha) + alpha * m,
        "note": NETWORK_DEMO_NOTE,
    }
    return bound, report


def random_instance(seed: int, m: int, coef_range: tuple[float, float] = (0.0, 10.0)) -> Instance:
    """Deterministic random instance; each coefficient is exactly zero with
    probability 0.1 to exercise the zero-slope and zero-intercept paths."""
    lo, hi = float(coef_range[0]), float(coef_range[1])
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo < 0.0 or hi < lo:
        raise InvalidRange(f"coefficient range must satisfy 0 <= lo <= hi, got ({lo}, {hi})")
    rng = random.Random(seed)
    links = []
    for _ in range(m):
        a = 0.0 if rng.random() < 0.1 else rng.uniform(lo, hi)
        b = 0.0 if rng.random() < 0.1 else rng.uniform(lo, hi)
        links.append((a, b))
    return validate(links)


@dataclass(frozen=True)
class SweepRow:
    """One row of a cost-of-malice sweep over alpha."""

    alpha: float
    eq_value: float
    com: float
    scale_com: float
    bound_43: float
    bound_scale: float


def com_sweep(inst: Instance, alphas) -> list[SweepRow]:
    """Evaluate the cost-of-malice report on a grid of alphas.

    Rows come back sorted by alpha.  The scale_com column divides the
    scaled-optimum value by the same baseline as the equilibrium ratio,
    exposing where the 4/3 and 1 + alpha/2 bounds cross (alpha = 2/3).
    """
    rows = []
    for alpha in alphas:
        report = com_report(inst, alpha)
        scale_com = report.scale_value / ((1.0 - alpha) * report.opt_cost_1)
        rows.append(
            SweepRow(
                alpha=report.alpha,
                eq_value=report.eq_value,
                com=report.com,
                scale_com=scale_com,
                bound_43=report.bound_43,
                bound_scale=report.bound_scale,
            )
        )
    rows.sort(key=lambda row: row.alpha)
    return rows
