"""Core domain types for adversarial load balancing on parallel links.

An instance is a set of m parallel links with linear latencies
l_i(z) = a_i * z + b_i.  Two players split one unit of flow: an
adversarial player (MAL) routes mass alpha so as to maximize the cost
of the other player (SOC), who routes mass 1 - alpha so as to minimize
her own cost

    C(x, y) = sum_k y_k * l_k(x_k + y_k).

Flows store absolute link loads, not fractions of a player's mass, and
carry their declared total mass explicitly so that the degenerate cases
alpha = 0 and alpha = 1 need no special handling.

Every type in this module is immutable after construction and every
operation is a pure function, so everything here is safe to share
across threads.
"""

import hashlib
import json
import math
from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    EmptyInstance,
    InvalidAlpha,
    InvalidFlow,
    InvalidMass,
    NegativeCoefficient,
    NonFiniteCoefficient,
    ValidationError,
)

# Tolerance constants used across the package; CLI reports echo these.
MASS_TOL = 1e-9          # |sum(values) - mass| <= MASS_TOL * max(1, mass)
ENTRY_CLAMP = 1e-12      # entries in [-ENTRY_CLAMP, 0) clamp to zero
CHECK_TOL = 1e-9         # certificate checks and support detection
RESIDUAL_TARGET = 1e-7   # residual size equilibrium constructions must reach
CERT_FAIL_TOL = 1e-6     # residual size that signals a solver bug, not noise

TOLERANCES = {
    "mass": MASS_TOL,
    "entry_clamp": ENTRY_CLAMP,
    "certificate": CHECK_TOL,
    "residual_target": RESIDUAL_TARGET,
    "certificate_failure": CERT_FAIL_TOL,
}


@dataclass(frozen=True)
class Instance:
    """m parallel links, each a (slope, intercept) pair of its latency."""

    links: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if len(self.links) == 0:
            raise EmptyInstance("an instance needs at least one link")
        clean = []
        for a, b in self.links:
            a = float(a)
            b = float(b)
            if not (math.isfinite(a) and math.isfinite(b)):
                raise NonFiniteCoefficient(f"link ({a}, {b}) has a non-finite coefficient")
            if a < 0.0 or b < 0.0:
                raise NegativeCoefficient(f"link ({a}, {b}) has a negative coefficient")
            clean.append((a, b))
        object.__setattr__(self, "links", tuple(clean))

    @property
    def m(self) -> int:
        return len(self.links)

    @property
    def slopes(self) -> tuple[float, ...]:
        return tuple(a for a, _ in self.links)

    @property
    def intercepts(self) -> tuple[float, ...]:
        return tuple(b for _, b in self.links)


def validate(raw_links) -> Instance:
    """Build an Instance from (slope, intercept) pairs, rejecting bad input."""
    return Instance(tuple((a, b) for a, b in raw_links))


@dataclass(frozen=True)
class Flow:
    """A nonnegative allocation over links together with its declared mass.

    Entries in [-ENTRY_CLAMP, 0) are clamped to zero at construction;
    they are arithmetic noise from the closed-form solvers.  Anything
    more negative is an error.
    """

    values: tuple[float, ...]
    mass: float

    def __post_init__(self):
        mass = float(self.mass)
        if not math.isfinite(mass) or mass < 0.0:
            raise InvalidMass(f"flow mass must be finite and nonnegative, got {mass}")
        clean = []
        for v in self.values:
            v = float(v)
            if not math.isfinite(v):
                raise InvalidFlow("flow entries must be finite")
            if v < -ENTRY_CLAMP:
                raise InvalidFlow(f"flow entry {v} below clamp tolerance {-ENTRY_CLAMP}")
            clean.append(0.0 if v < 0.0 else v)
        total = 0.0
        for v in clean:
            total += v
        if abs(total - mass) > MASS_TOL * max(1.0, mass):
            raise InvalidMass(f"flow entries sum to {total}, declared mass {mass}")
        object.__setattr__(self, "values", tuple(clean))
        object.__setattr__(self, "mass", mass)

    @classmethod
    def zero(cls, m: int) -> "Flow":
        return cls((0.0,) * m, 0.0)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.values) if v > 0.0)


@dataclass(frozen=True)
class Profile:
    """A strategy pair: adversarial flow of mass alpha, social flow of mass 1 - alpha."""

    mal: Flow
    soc: Flow
    alpha: float

    def __post_init__(self):
        alpha = float(self.alpha)
        if not math.isfinite(alpha) or not 0.0 <= alpha <= 1.0:
            raise InvalidAlpha(f"alpha must lie in [0, 1], got {alpha}")
        if len(self.mal.values) != len(self.soc.values):
            raise DimensionMismatch("profile flows must cover the same links")
        if abs(self.mal.mass - alpha) > MASS_TOL:
            raise InvalidMass(f"adversarial mass {self.mal.mass} != alpha {alpha}")
        if abs(self.soc.mass - (1.0 - alpha)) > MASS_TOL:
            raise InvalidMass(f"social mass {self.soc.mass} != 1 - alpha {1.0 - alpha}")
        object.__setattr__(self, "alpha", alpha)


@dataclass(frozen=True)
class EquilibriumCertificate:
    """Residuals proving a profile is a mutual best response.

    mal_residual: worst shortfall of the adversary's played links from the
        most damaging link, max_j a_j y_j - min over loaded i of a_i y_i.
    soc_residual: worst violation of equalized marginal cost under the
        latencies induced by the adversary's loads.
    value: SOC's cost at the profile.
    """

    mal_residual: float
    soc_residual: float
    value: float

    def valid_at(self, tol: float) -> bool:
        return self.mal_residual <= tol and self.soc_residual <= tol


@dataclass(frozen=True)
class ComReport:
    """Equilibrium value, cost-of-malice ratio, and every bound we can evaluate.

    com         = eq_value / ((1 - alpha) * opt_cost_1)
    bound_43    = 4/3, valid for every alpha on linear latencies
    bound_scale = 1 + alpha/2, via the scaled-optimum strategy
    evasive_bound = (1 - alpha) * nash_cost_1, achievable by dodging
        overloaded links no matter what the adversary plays
    """

    alpha: float
    eq_value: float
    nash_cost_1: float
    opt_cost_1: float
    com: float
    bound_43: float
    bound_scale: float
    scale_value: float
    evasive_bound: float

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "eq_value": self.eq_value,
            "nash_cost_1": self.nash_cost_1,
            "opt_cost_1": self.opt_cost_1,
            "com": self.com,
            "bound_43": self.bound_43,
            "bound_scale": self.bound_scale,
            "scale_value": self.scale_value,
            "evasive_bound": self.evasive_bound,
        }


def cost(inst: Instance, x: Flow, y: Flow) -> float:
    """SOC's cost sum_k y_k * (a_k (x_k + y_k) + b_k) at the profile (x, y)."""
    if len(x.values) != inst.m or len(y.values) != inst.m:
        raise DimensionMismatch("flows must have one entry per link")
    total = 0.0
    for (a, b), xi, yi in zip(inst.links, x.values, y.values):
        total += yi * (a * (xi + yi) + b)
    return total


# --- serialization ---------------------------------------------------------
#
# Instance files: {"links": [{"a": <number>, "b": <number>}, ...]}
# Profiles in reports: {"alpha": <number>, "mal": [...], "soc": [...]}
# Numbers are emitted with 17 significant digits, which round-trips every
# finite double bit-exactly, and key order is fixed, so identical inputs
# produce byte-identical documents.


def _fmt_float(x: float) -> str:
    return format(x, ".17g")


def dumps(payload) -> str:
    """Deterministic JSON: insertion key order, floats at 17 significant digits."""
    pieces: list[str] = []
    _render(payload, pieces, 0)
    return "".join(pieces)


def _render(value, out, depth):
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, float):
        out.append(_fmt_float(value))
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        inner = "  " * (depth + 1)
        out.append("{\n")
        for idx, (key, item) in enumerate(value.items()):
            out.append(inner)
            out.append(json.dumps(str(key)))
            out.append(": ")
            _render(item, out, depth + 1)
            out.append(",\n" if idx + 1 < len(value) else "\n")
        out.append("  " * depth + "}")
    elif isinstance(value, (list, tuple)):
        items = list(value)
        if not items:
            out.append("[]")
            return
        if all(isinstance(v, (int, float, str)) and not isinstance(v, bool) for v in items):
            out.append("[")
            for idx, item in enumerate(items):
                _render(item, out, depth)
                if idx + 1 < len(items):
                    out.append(", ")
            out.append("]")
        else:
            inner = "  " * (depth + 1)
            out.append("[\n")
            for idx, item in enumerate(items):
                out.append(inner)
                _render(item, out, depth + 1)
                out.append(",\n" if idx + 1 < len(items) else "\n")
            out.append("  " * depth + "]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def emit_instance(inst: Instance) -> str:
    """Serialize an instance to its canonical JSON document."""
    return dumps({"links": [{"a": a, "b": b} for a, b in inst.links]})


def parse_instance(text: str) -> Instance:
    """Parse the canonical instance document, validating shape and coefficients."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"instance document is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "links" not in doc:
        raise ValidationError("instance document must be an object with a 'links' array")
    raw = doc["links"]
    if not isinstance(raw, list):
        raise ValidationError("'links' must be an array")
    links = []
    for entry in raw:
        if not isinstance(entry, dict) or "a" not in entry or "b" not in entry:
            raise ValidationError("each link must be an object with 'a' and 'b'")
        a, b = entry["a"], entry["b"]
        if isinstance(a, bool) or isinstance(b, bool) \
                or not isinstance(a, (int, float)) or not isinstance(b, (int, float)):
            raise ValidationError("link coefficients must be numbers")
        links.append((float(a), float(b)))
    return validate(links)


def instance_digest(inst: Instance) -> str:
    """sha256 of the canonical instance document; echoed by CLI reports."""
    return hashlib.sha256(emit_instance(inst).encode("ascii")).hexdigest()
