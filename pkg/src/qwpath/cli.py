"""
Batch front end.

    qwpath run     --engine closed --steps 100 --theta-pi 1/4 --format csv
    qwpath compare --engines evolve,paths,closed --steps 10 --tol 1e-12
    qwpath sweep   --vary theta --range-pi 0:1/2:1/20 --steps 50

Exit codes: 0 success, 1 comparison failure, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import sys
import time
from fractions import Fraction
from typing import Callable, Sequence, TextIO

from .closedform import closed_state
from .core import StateVector, WalkSpec
from .evolver import evolve
from .pathsum import DEFAULT_CAP, MAX_CAP, EnumerationCapError, sum_over_paths

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3

ENGINES = ("evolve", "paths", "closed")
MAX_SWEEP_POINTS = 10_000


class UsageError(Exception):
    pass


def _fmt(v: float) -> str:
    return format(v + 0.0, ".17g")


def engine_function(name: str, cap: int = DEFAULT_CAP, workers: int | None = None) -> Callable[[WalkSpec], StateVector]:
    if name == "evolve":
        return evolve
    if name == "paths":
        return lambda spec: sum_over_paths(spec, cap=cap, workers=workers)
    if name == "closed":
        return closed_state
    raise UsageError(f"unknown engine {name!r}; choose from {', '.join(ENGINES)}")


def records(state: StateVector) -> list[dict]:
    """Non-zero entries as ``{coin, x, re, im, prob}`` sorted by ``(x, coin)``."""
    out = []
    for coin, x, amp in state:
        if amp == 0:
            continue
        out.append(dict(coin=coin, x=x, re=amp.real + 0.0, im=amp.imag + 0.0,
                        prob=abs(amp) ** 2))
    return out


def write_csv(rows: list[dict], out: TextIO):
    out.write("coin,x,re,im,prob\n")
    for r in rows:
        out.write(f"{r['coin']},{r['x']},{_fmt(r['re'])},{_fmt(r['im'])},{_fmt(r['prob'])}\n")


def _json_rows(rows: list[dict]) -> list[dict]:
    return [dict(r, re=float(_fmt(r["re"])), im=float(_fmt(r["im"])),
                 prob=float(_fmt(r["prob"]))) for r in rows]


def parse_pi_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational multiple of pi: {text!r}") from None


def _spec_from_args(args, **override) -> WalkSpec:
    theta = args.theta
    if args.theta_pi is not None:
        theta = float(parse_pi_fraction(args.theta_pi)) * math.pi
    fields = dict(n=args.steps, theta=theta, alpha=args.alpha, beta=args.beta, phi=args.phi)
    fields.update(override)
    try:
        return WalkSpec(**fields)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def cmd_run(args, out: TextIO) -> int:
    spec = _spec_from_args(args)
    state = engine_function(args.engine, args.cap, args.parallel)(spec)
    rows = records(state)
    if args.format == "csv":
        write_csv(rows, out)
    else:
        json.dump(dict(spec=spec.as_dict(), engine=args.engine, entries=_json_rows(rows)), out)
        out.write("\n")
    return EXIT_OK


def cmd_compare(args, out: TextIO) -> int:
    names = [e.strip() for e in args.engines.split(",") if e.strip()]
    if len(set(names)) < 2:
        raise UsageError("compare needs at least two distinct engines")
    spec = _spec_from_args(args)
    states = {}
    for i, name in enumerate(dict.fromkeys(names)):
        run_spec = spec
        if args.perturb_theta and i == len(set(names)) - 1:
            run_spec = spec.replace(theta=spec.theta + args.perturb_theta)
        fn = engine_function(name, args.cap, args.parallel)
        t0 = time.perf_counter()
        states[name] = fn(run_spec)
        out.write(f"{name:>7}: {time.perf_counter() - t0:.6f} s\n")

    worst, where = 0.0, None
    for a, b in itertools.combinations(states, 2):
        diff = abs(states[a].amplitudes - states[b].amplitudes)
        k = divmod(int(diff.argmax()), diff.shape[1])
        if diff[k] > worst or where is None:
            worst, where = float(diff[k]), k
    coin, col = where
    x = col - spec.n
    out.write(f"max discrepancy {worst:.3e} at (coin={coin}, x={x}), tolerance {args.tol:.3e}\n")
    if worst <= args.tol:
        out.write("PASS\n")
        return EXIT_OK
    for name, state in states.items():
        amp = state[(coin, x)]
        out.write(f"  {name}: {_fmt(amp.real)} {_fmt(amp.imag)}i\n")
    out.write("FAIL\n")
    return EXIT_MISMATCH


def _parse_range(text: str, kind: type) -> list:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"range must be START:STOP:STEP, got {text!r}")
    try:
        start, stop, step = (kind(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed range {text!r}") from None
    if step == 0 or (stop - start) * step < 0:
        raise UsageError(f"range {text!r} is not monotone")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    if count > MAX_SWEEP_POINTS:
        raise UsageError(f"range has {count} points; limit is {MAX_SWEEP_POINTS}")
    return [start + k * step for k in range(count)]


def sweep_values(args) -> list:
    given = [a for a in (args.range, args.range_pi, args.values) if a is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --range, --range-pi, --values")
    if args.range_pi is not None:
        if args.vary != "theta":
            raise UsageError("--range-pi only applies to --vary theta")
        values = [float(v) * math.pi for v in _parse_range(args.range_pi, Fraction)]
    elif args.range is not None:
        values = _parse_range(args.range, int if args.vary == "steps" else float)
    else:
        kind = int if args.vary == "steps" else float
        try:
            values = [kind(v) for v in args.values.split(",")]
        except ValueError:
            raise UsageError(f"malformed value list {args.values!r}") from None
        if len(values) > MAX_SWEEP_POINTS:
            raise UsageError(f"{len(values)} values; limit is {MAX_SWEEP_POINTS}")
        steps = [b - a for a, b in zip(values, values[1:])]
        if not (all(d > 0 for d in steps) or all(d < 0 for d in steps)):
            raise UsageError("sweep values must be strictly monotone")
    if args.vary == "steps" and min(values) < 0:
        raise UsageError("step counts must be non-negative")
    return values


def cmd_sweep(args, out: TextIO) -> int:
    values = sweep_values(args)
    field = "n" if args.vary == "steps" else "theta"
    if args.vary == "steps":
        args.steps = values[0]
    specs = [_spec_from_args(args, **{field: v}) for v in values]
    fn = engine_function(args.engine, args.cap, args.parallel)
    blocks = []
    for v, spec in zip(values, specs):
        rows = records(fn(spec))
        if args.format == "csv":
            label = v if args.vary == "steps" else _fmt(v)
            out.write(f"# {args.vary}={label}\n")
            write_csv(rows, out)
        else:
            blocks.append(dict(value=v, spec=spec.as_dict(), entries=_json_rows(rows)))
    if args.format == "json":
        json.dump(dict(vary=args.vary, engine=args.engine, blocks=blocks), out)
        out.write("\n")
    return EXIT_OK


def _add_spec_args(p: argparse.ArgumentParser, steps_required: bool = True):
    p.add_argument("--steps", type=int, required=steps_required, help="number of steps n")
    angle = p.add_mutually_exclusive_group()
    angle.add_argument("--theta", type=float, default=math.pi / 4, help="coin angle in radians")
    angle.add_argument("--theta-pi", metavar="P/Q", help="coin angle as a rational multiple of pi")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help=f"step cap for the paths engine (max {MAX_CAP})")
    p.add_argument("--parallel", type=int, default=None, metavar="WORKERS",
                   help="worker threads for the paths engine")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qwpath", description="Discrete-time quantum walk amplitudes.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="evolve one walk and print its amplitudes")
    run.add_argument("--engine", choices=ENGINES, default="closed")
    run.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_spec_args(run)

    cmp_ = sub.add_parser("compare", help="check engines against each other")
    cmp_.add_argument("--engines", default=",".join(ENGINES))
    cmp_.add_argument("--tol", type=float, default=1e-12)
    cmp_.add_argument("--perturb-theta", type=float, default=0.0, metavar="DELTA",
                      help="shift theta for the last engine (negative control)")
    _add_spec_args(cmp_)

    sweep = sub.add_parser("sweep", help="one distribution per parameter value")
    sweep.add_argument("--vary", choices=("theta", "steps"), required=True)
    sweep.add_argument("--range", metavar="START:STOP:STEP")
    sweep.add_argument("--range-pi", metavar="START:STOP:STEP")
    sweep.add_argument("--values", metavar="V1,V2,...")
    sweep.add_argument("--engine", choices=ENGINES, default="closed")
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_spec_args(sweep, steps_required=False)
    return parser


_COMMANDS = {"run": cmd_run, "compare": cmd_compare, "sweep": cmd_sweep}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "sweep" and args.steps is None:
        if args.vary != "steps":
            err.write("qwpath sweep: --steps is required unless --vary steps\n")
            return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"qwpath {args.command}: {exc}\n")
        return EXIT_USAGE
    except EnumerationCapError as exc:
        err.write(f"qwpath {args.command}: {exc}\n")
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
