"""Best responses, pure equilibria, and cost-of-malice reports.

The zero-sum game: MAL routes mass alpha to maximize SOC's cost, SOC
routes mass 1 - alpha to minimize it.  On linear latencies the game has
a pure equilibrium: MAL plays the selfish (equalized-latency) flow of
its own mass, SOC plays the minimum-cost flow under the induced
latencies, and the two residual checks below certify mutual best
response machine-checkably.
"""

import math
from dataclasses import dataclass

from .errors import (
    CertificateFailure,
    DegenerateInstance,
    DimensionMismatch,
    InvalidAlpha,
)
from .flows import flow_cost, induced_optimum, system_optimum, wardrop_flow
from .model import (
    CERT_FAIL_TOL,
    CHECK_TOL,
    ComReport,
    EquilibriumCertificate,
    Flow,
    Instance,
    Profile,
    cost,
)


@dataclass(frozen=True)
class BestResponseResult:
    """A strategy, its cost to SOC, and a tag describing how it was built."""

    flow: Flow
    value: float
    support_rule: str


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not math.isfinite(alpha) or not 0.0 <= alpha <= 1.0:
        raise InvalidAlpha(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def mal_best_response(inst: Instance, y: Flow, alpha: float) -> BestResponseResult:
    """Adversary's best response to y: all mass on the link maximizing a_k y_k.

    Per unit of adversarial load on link k, SOC's cost rises by a_k y_k,
    and the total cost is sum_k y_k l_k(y_k) + alpha * max_k a_k y_k no
    matter how the mass is spread over the maximizing links.  Ties break
    to the lowest index so results are reproducible.
    """
    alpha = _check_alpha(alpha)
    if len(y.values) != inst.m:
        raise DimensionMismatch("flow must have one entry per link")
    damage = [a * yi for a, yi in zip(inst.slopes, y.values)]
    best = 0
    for i in range(1, inst.m):
        if damage[i] > damage[best]:
            best = i
    values = [0.0] * inst.m
    values[best] = alpha
    x = Flow(tuple(values), alpha)
    return BestResponseResult(x, cost(inst, x, y), f"argmax:{best}")


def soc_best_response(inst: Instance, x: Flow) -> BestResponseResult:
    """SOC's best response to adversarial loads x of mass alpha.

    This is the minimum-cost flow of mass 1 - alpha under the induced
    latencies l_i(x_i + y).
    """
    if x.mass > 1.0 + CHECK_TOL:
        raise InvalidAlpha(f"adversarial mass {x.mass} exceeds the unit total")
    beta = 1.0 - x.mass
    if beta < 0.0:
        beta = 0.0
    y, _ = induced_optimum(inst, x, beta)
    return BestResponseResult(y, cost(inst, x, y), "induced-optimum")


def check_mal_br(inst: Instance, x: Flow, y: Flow, tol: float = CHECK_TOL) -> float:
    """Residual of the adversary's best-response condition.

    x is a best response to y iff every loaded link attains
    max_j a_j y_j; the residual is max_j a_j y_j minus the worst loaded
    link's a_i y_i, and zero when x has no support above tol.
    """
    if len(x.values) != inst.m or len(y.values) != inst.m:
        raise DimensionMismatch("flows must have one entry per link")
    damage = [a * yi for a, yi in zip(inst.slopes, y.values)]
    loaded = [damage[i] for i in range(inst.m) if x.values[i] > tol]
    if not loaded:
        return 0.0
    return max(damage) - min(loaded)


def check_soc_br(inst: Instance, x: Flow, y: Flow, tol: float = CHECK_TOL) -> float:
    """Residual of SOC's best-response condition under induced latencies.

    y is optimal iff every loaded link has minimal induced marginal cost
    2 a_i y_i + a_i x_i + b_i; the residual is the worst loaded marginal
    minus the smallest marginal anywhere, floored at zero.
    """
    if len(x.values) != inst.m or len(y.values) != inst.m:
        raise DimensionMismatch("flows must have one entry per link")
    marginal = [
        2.0 * a * yi + a * xi + b
        for (a, b), xi, yi in zip(inst.links, x.values, y.values)
    ]
    loaded = [marginal[i] for i in range(inst.m) if y.values[i] > tol]
    if not loaded:
        return 0.0
    residual = max(loaded) - min(marginal)
    return residual if residual > 0.0 else 0.0


def pure_equilibrium(inst: Instance, alpha: float) -> tuple[Profile, EquilibriumCertificate]:
    """The pure equilibrium: MAL plays selfishly, SOC best-responds.

    MAL's strategy is the equalized-latency flow of mass alpha, exactly
    what a crowd of infinitesimal selfish agents would produce, so the
    adversary does no more harm than selfish traffic.  SOC's reply is the
    induced-latency optimum.  Both residuals are returned as a
    certificate rather than assumed; the value is recomputed from the
    profile so certificate and value cannot drift apart.
    """
    alpha = _check_alpha(alpha)
    x, _ = wardrop_flow(inst, alpha)
    br = soc_best_response(inst, x)
    y = br.flow
    mal_residual = check_mal_br(inst, x, y)
    soc_residual = check_soc_br(inst, x, y)
    certificate = EquilibriumCertificate(mal_residual, soc_residual, br.value)
    if mal_residual > CERT_FAIL_TOL or soc_residual > CERT_FAIL_TOL:
        raise CertificateFailure(
            f"equilibrium residuals ({mal_residual}, {soc_residual}) exceed {CERT_FAIL_TOL}"
        )
    return Profile(mal=x, soc=y, alpha=alpha), certificate


def evasive_response(inst: Instance, x: Flow) -> BestResponseResult:
    """A reply to x that keeps SOC's cost at most (1 - alpha) * nash_cost_1.

    Let s be the unit equalized-latency flow with common latency L.  Skip
    every link the adversary loads to at least s_i; on the rest there is
    room s_i - x_i, and filling it in increasing index order places all of
    SOC's mass (the skipped links freed at least that much room).  Every
    link used stays at total load at most s_i, hence at latency at most L.
    """
    alpha = x.mass
    beta = 1.0 - alpha
    if beta < 0.0:
        beta = 0.0
    s, _ = wardrop_flow(inst, 1.0)
    values = [0.0] * inst.m
    remaining = beta
    last = None
    for i in range(inst.m):
        if remaining == 0.0:
            break
        room = s.values[i] - x.values[i]
        if room <= 0.0:
            continue
        take = room if room < remaining else remaining
        values[i] = take
        remaining -= take
        last = i
    if remaining > 0.0 and last is not None:
        values[last] += remaining  # float residue; the room slack absorbs it
    y = Flow(tuple(values), beta)
    return BestResponseResult(y, cost(inst, x, y), "greedy-fill")


def scale_strategy(inst: Instance, alpha: float) -> BestResponseResult:
    """SOC plays 1 - alpha times the unit minimum-cost flow.

    The returned value is SOC's cost when the adversary best-responds.
    It always stays within (1 + alpha/2) * (1 - alpha) * opt_cost_1.  The
    value is also recomputed through the expansion
        (1-alpha)^2 * opt_cost_1 + alpha * (1-alpha) * (a_t y*_t + sum_k b_k y*_k)
    with t the link maximizing a_k y*_k, and the two must agree; a
    disagreement signals a solver bug.
    """
    alpha = _check_alpha(alpha)
    ystar, _ = system_optimum(inst, 1.0)
    scaled_values = tuple((1.0 - alpha) * v for v in ystar.values)
    total = 0.0
    for v in scaled_values:
        total += v
    y = Flow(scaled_values, total)
    br = mal_best_response(inst, y, alpha)
    value = br.value
    opt_cost = flow_cost(inst, ystar)
    damage = [a * v for a, v in zip(inst.slopes, ystar.values)]
    t = 0
    for i in range(1, inst.m):
        if damage[i] > damage[t]:
            t = i
    spread = damage[t] + sum(b * v for (_, b), v in zip(inst.links, ystar.values))
    expansion = (1.0 - alpha) ** 2 * opt_cost + alpha * (1.0 - alpha) * spread
    if abs(value - expansion) > CERT_FAIL_TOL * max(1.0, abs(value)):
        raise CertificateFailure(
            f"scaled-optimum value {value} disagrees with its expansion {expansion}"
        )
    return BestResponseResult(y, value, "scaled-optimum")


def com_report(inst: Instance, alpha: float) -> ComReport:
    """Assemble the equilibrium value, cost of malice, and all bounds.

    Undefined at alpha = 1 (the ratio divides by the social mass) and on
    instances whose unit optimum cost is zero.
    """
    alpha = _check_alpha(alpha)
    if alpha >= 1.0:
        raise InvalidAlpha("cost of malice is undefined at alpha = 1")
    nash_flow, _ = wardrop_flow(inst, 1.0)
    nash_cost_1 = flow_cost(inst, nash_flow)
    opt_flow, _ = system_optimum(inst, 1.0)
    opt_cost_1 = flow_cost(inst, opt_flow)
    if opt_cost_1 <= 0.0:
        raise DegenerateInstance("unit optimum cost is zero; cost of malice undefined")
    _, certificate = pure_equilibrium(inst, alpha)
    scale = scale_strategy(inst, alpha)
    return ComReport(
        alpha=alpha,
        eq_value=certificate.value,
        nash_cost_1=nash_cost_1,
        opt_cost_1=opt_cost_1,
        com=certificate.value / ((1.0 - alpha) * opt_cost_1),
        bound_43=4.0 / 3.0,
        bound_scale=1.0 + alpha / 2.0,
        scale_value=scale.value,
        evasive_bound=(1.0 - alpha) * nash_cost_1,
    )
