"""Command-line interface: flow solvers, equilibria, reports, verification.

All reports are JSON on stdout (CSV for `sweep --csv`) and echo the
instance hash and the tolerance constants in force.  Identical
invocations produce byte-identical output; anything run-dependent, such
as the wall time of `verify`, goes to stderr.

Exit codes: 0 success, 2 usage or validation error, 3 certificate or
verification failure.
"""

import argparse
import math
import sys
import time

from .errors import CertificateFailure, ValidationError
from .families import com_sweep, pigou, random_instance, tight
from .flows import flow_cost, system_optimum, wardrop_flow
from .game import com_report, pure_equilibrium, scale_strategy
from .model import (
    TOLERANCES,
    Instance,
    dumps,
    emit_instance,
    instance_digest,
    parse_instance,
    validate,
    _fmt_float,
)
from .oracle import GridSpec, mal_soc_value, soc_mal_value

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CERTIFICATE = 3

CSV_HEADER = "alpha,eq_value,com,scale_com,bound_43,bound_scale"


def _load_instance(path: str) -> Instance:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_instance(handle.read())


def _finish(payload: dict, inst: Instance) -> dict:
    payload["instance_sha256"] = instance_digest(inst)
    payload["tolerances"] = TOLERANCES
    return payload


def _cmd_solve(args) -> int:
    inst = _load_instance(args.instance)
    if args.wardrop:
        flow, level = wardrop_flow(inst, args.mass)
        mode = "wardrop"
    else:
        flow, level = system_optimum(inst, args.mass)
        mode = "optimum"
    payload = {
        "command": "solve",
        "mode": mode,
        "mass": args.mass,
        "flow": list(flow.values),
        "level": level.level,
        "support": sorted(level.support),
        "cost": flow_cost(inst, flow),
    }
    print(dumps(_finish(payload, inst)))
    return EXIT_OK


def _cmd_equilibrium(args) -> int:
    inst = _load_instance(args.instance)
    profile, certificate = pure_equilibrium(inst, args.alpha)
    payload = {
        "command": "equilibrium",
        "alpha": profile.alpha,
        "mal": list(profile.mal.values),
        "soc": list(profile.soc.values),
        "value": certificate.value,
        "mal_residual": certificate.mal_residual,
        "soc_residual": certificate.soc_residual,
    }
    print(dumps(_finish(payload, inst)))
    return EXIT_OK


def _cmd_com(args) -> int:
    inst = _load_instance(args.instance)
    report = com_report(inst, args.alpha)
    payload = {"command": "com"}
    payload.update(report.as_dict())
    print(dumps(_finish(payload, inst)))
    return EXIT_OK


def _cmd_scale(args) -> int:
    inst = _load_instance(args.instance)
    result = scale_strategy(inst, args.alpha)
    opt_cost_1 = flow_cost(inst, system_optimum(inst, 1.0)[0])
    payload = {
        "command": "scale",
        "alpha": args.alpha,
        "soc": list(result.flow.values),
        "value": result.value,
        "upper_bound": (1.0 + args.alpha / 2.0) * (1.0 - args.alpha) * opt_cost_1,
    }
    print(dumps(_finish(payload, inst)))
    return EXIT_OK


def _cmd_verify(args) -> int:
    inst = _load_instance(args.instance)
    grid = GridSpec(args.grid)
    started = time.perf_counter()
    upper = soc_mal_value(inst, args.alpha, grid)
    lower = mal_soc_value(inst, args.alpha, grid)
    elapsed = time.perf_counter() - started
    _, certificate = pure_equilibrium(inst, args.alpha)
    gap = upper - lower
    contains = lower - 1e-9 <= certificate.value <= upper + 1e-9
    ok = gap >= -1e-9 and contains
    payload = {
        "command": "verify",
        "alpha": args.alpha,
        "grid": args.grid,
        "points": grid.points(inst.m),
        "soc_mal": upper,
        "mal_soc": lower,
        "gap": gap,
        "equilibrium_value": certificate.value,
        "bracket_contains_value": contains,
        "ok": ok,
    }
    print(dumps(_finish(payload, inst)))
    print(f"verify: {grid.points(inst.m)} points per direction in {elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK if ok else EXIT_CERTIFICATE


def _cmd_gen(args) -> int:
    family = args.family
    if family == "pigou":
        inst = pigou()
    elif family.startswith("tight:"):
        inst = tight(float(family.split(":", 1)[1]))
    elif family.startswith("network:"):
        count = int(family.split(":", 1)[1])
        if count < 1:
            raise ValidationError(f"network family needs at least one link, got {count}")
        inst = validate([(1.0, 0.0)] * count)
    elif family == "random":
        inst = random_instance(args.seed, args.m)
    else:
        raise ValidationError(f"unknown family {family!r}")
    document = emit_instance(inst)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(document + "\n")
    print(document)
    return EXIT_OK


def _parse_alpha_grid(text: str) -> list[float]:
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValidationError(f"alpha grid must be start:stop:step, got {text!r}")
        start, stop, step = (float(p) for p in parts)
        if not all(math.isfinite(v) for v in (start, stop, step)) or step <= 0.0:
            raise ValidationError(f"alpha grid must have a positive finite step, got {text!r}")
        count = int(round((stop - start) / step))
        values = [start + i * step for i in range(count + 1)]
        return [v for v in values if v <= stop + 1e-9]
    return [float(text)]


def _cmd_sweep(args) -> int:
    inst = _load_instance(args.instance)
    alphas = _parse_alpha_grid(args.alphas)
    rows = com_sweep(inst, alphas)
    if args.csv:
        lines = [CSV_HEADER]
        for row in rows:
            lines.append(
                ",".join(
                    _fmt_float(v)
                    for v in (row.alpha, row.eq_value, row.com,
                              row.scale_com, row.bound_43, row.bound_scale)
                )
            )
        text = "\n".join(lines) + "\n"
        if args.csv == "-":
            sys.stdout.write(text)
        else:
            with open(args.csv, "w", encoding="utf-8") as handle:
                handle.write(text)
    else:
        payload = {
            "command": "sweep",
            "rows": [
                {
                    "alpha": row.alpha,
                    "eq_value": row.eq_value,
                    "com": row.com,
                    "scale_com": row.scale_com,
                    "bound_43": row.bound_43,
                    "bound_scale": row.bound_scale,
                }
                for row in rows
            ],
        }
        print(dumps(_finish(payload, inst)))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="malice",
        description="Adversarial load balancing on parallel links with linear latencies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Equalized-latency or minimum-cost flow")
    solve.add_argument("--instance", required=True)
    mode = solve.add_mutually_exclusive_group(required=True)
    mode.add_argument("--wardrop", action="store_true", help="equalize latencies")
    mode.add_argument("--optimum", action="store_true", help="minimize total cost")
    solve.add_argument("--mass", type=float, required=True)
    solve.set_defaults(handler=_cmd_solve)

    equilibrium = sub.add_parser("equilibrium", help="Pure equilibrium profile and certificate")
    equilibrium.add_argument("--instance", required=True)
    equilibrium.add_argument("--alpha", type=float, required=True)
    equilibrium.set_defaults(handler=_cmd_equilibrium)

    com = sub.add_parser("com", help="Cost-of-malice report with all bounds")
    com.add_argument("--instance", required=True)
    com.add_argument("--alpha", type=float, required=True)
    com.set_defaults(handler=_cmd_com)

    scale = sub.add_parser("scale", help="Scaled-optimum strategy and its value")
    scale.add_argument("--instance", required=True)
    scale.add_argument("--alpha", type=float, required=True)
    scale.set_defaults(handler=_cmd_scale)

    verify = sub.add_parser("verify", help="Brute-force bracket of the game value")
    verify.add_argument("--instance", required=True)
    verify.add_argument("--alpha", type=float, required=True)
    verify.add_argument("--grid", type=int, required=True)
    verify.set_defaults(handler=_cmd_verify)

    gen = sub.add_parser("gen", help="Write an instance from a named family")
    gen.add_argument("--family", required=True,
                     help="pigou | tight:M | network:m | random")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--m", type=int, default=3)
    gen.add_argument("--out", default=None)
    gen.set_defaults(handler=_cmd_gen)

    sweep = sub.add_parser("sweep", help="Cost-of-malice sweep over alphas")
    sweep.add_argument("--instance", required=True)
    sweep.add_argument("--alphas", required=True, help="start:stop:step or a single value")
    sweep.add_argument("--csv", default=None, help="write CSV to this path ('-' for stdout)")
    sweep.set_defaults(handler=_cmd_sweep)

    return parser


def run(argv=None) -> int:
    """Parse argv, dispatch, and map errors to the exit-code contract."""
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CertificateFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATE
    except (ValidationError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
