"""Adversarial load balancing on parallel links with linear latencies.

Solvers for equalized-latency and minimum-cost flows, best responses
and pure equilibria of the zero-sum game between an adversarial and a
cost-minimizing router, the scaled-optimum strategy, cost-of-malice
reports, and an independent brute-force bracket of the game value.
"""

from .errors import (
    CertificateFailure,
    DegenerateInstance,
    DimensionMismatch,
    EmptyInstance,
    GridTooLarge,
    InvalidAlpha,
    InvalidFlow,
    InvalidM,
    InvalidMass,
    InvalidRange,
    MaliceError,
    NegativeCoefficient,
    NonFiniteCoefficient,
    NonPositiveM,
    ValidationError,
)
from .families import SweepRow, com_sweep, network_demo, pigou, random_instance, tight
from .flows import WaterLevel, flow_cost, induced_optimum, system_optimum, wardrop_flow, waterfill
from .game import (
    BestResponseResult,
    check_mal_br,
    check_soc_br,
    com_report,
    evasive_response,
    mal_best_response,
    pure_equilibrium,
    scale_strategy,
    soc_best_response,
)
from .model import (
    ComReport,
    EquilibriumCertificate,
    Flow,
    Instance,
    Profile,
    TOLERANCES,
    cost,
    emit_instance,
    instance_digest,
    parse_instance,
    validate,
)
from .oracle import GridSpec, mal_soc_value, minimax_gap, simplex_grid, soc_mal_value

__version__ = "0.1.0"

__all__ = [
    "BestResponseResult",
    "CertificateFailure",
    "ComReport",
    "DegenerateInstance",
    "DimensionMismatch",
    "EmptyInstance",
    "EquilibriumCertificate",
    "Flow",
    "GridSpec",
    "GridTooLarge",
    "Instance",
    "InvalidAlpha",
    "InvalidFlow",
    "InvalidM",
    "InvalidMass",
    "InvalidRange",
    "MaliceError",
    "NegativeCoefficient",
    "NonFiniteCoefficient",
    "NonPositiveM",
    "Profile",
    "SweepRow",
    "TOLERANCES",
    "ValidationError",
    "WaterLevel",
    "check_mal_br",
    "check_soc_br",
    "com_report",
    "com_sweep",
    "cost",
    "emit_instance",
    "evasive_response",
    "flow_cost",
    "induced_optimum",
    "instance_digest",
    "mal_best_response",
    "mal_soc_value",
    "minimax_gap",
    "network_demo",
    "parse_instance",
    "pigou",
    "pure_equilibrium",
    "random_instance",
    "scale_strategy",
    "simplex_grid",
    "soc_best_response",
    "soc_mal_value",
    "system_optimum",
    "tight",
    "validate",
    "wardrop_flow",
    "waterfill",
]
