"""Command-line entry point.

Exit codes: 0 on success, 1 on configuration or input errors, 2 when an
invariant check (sandwich, saturation, norm identity) fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from pathlib import Path

from .errors import BoundsError, InputSchemaError
from .experiments.fixtures import fixture_fig1, fixture_fig2
from .experiments.report import compare_bounds
from .experiments.serialize import decode_instance
from .experiments.suites import TOLERANCES, run_random_suite, run_verify
from .experiments.sweeps import abs_a_grid, sweep_abs_a, sweep_theta, theta_grid

OUTPUT_DIR_ENV = "UNCERTAINTY_BOUNDS_OUTPUT_DIR"
FIG1_COLUMNS = ["sov", "lower", "upper"]
FIG2_COLUMNS = ["sov", "lb", "ub", "fb", "pb", "tb1", "tbm", "tb2"]


class ConfigError(BoundsError, ValueError):
    pass


class InvariantViolation(BoundsError):
    pass


def fmt(v: float) -> str:
    return f"{v:.12g}"


def _round(v: float) -> float:
    return float(fmt(v))


def _parse_tol(items: list[str]) -> dict[str, float]:
    tol = dict(TOLERANCES)
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep or name not in tol:
            raise ConfigError(f"bad tolerance override {item!r}; known names: {sorted(tol)}")
        try:
            v = float(value)
        except ValueError:
            raise ConfigError(f"tolerance {name} is not a number: {value!r}") from None
        if not v > 0:
            raise ConfigError(f"tolerance {name} must be positive")
        tol[name] = v
    return tol


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default=None,
                        help="output format (default depends on the command)")
    common.add_argument("--output", "-o", default="-",
                        help="output file, '-' for stdout; relative paths resolve against "
                             f"${OUTPUT_DIR_ENV} when set")
    common.add_argument("--tol", action="append", metavar="NAME=VALUE",
                        help="override a tolerance, e.g. --tol sandwich=1e-8")

    p = argparse.ArgumentParser(prog="uncertainty-bounds", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    f1 = sub.add_parser("fig1", parents=[common], help="two-observable bounds versus |a|")
    f1.add_argument("--grid-points", type=int, default=101)

    f2 = sub.add_parser("fig2", parents=[common], help="four-observable bounds versus theta")
    f2.add_argument("--grid-points", type=int, default=201)
    f2.add_argument("--theta-range", type=float, nargs=2, metavar=("LO", "HI"),
                    default=(0.0, math.pi))

    cmp_ = sub.add_parser("compare", parents=[common], help="all bounds for one instance")
    cmp_.add_argument("--input", "-i", default="-", help="instance JSON document ('-' for stdin)")

    for name, helptext in (("verify", "norm identities and sandwich checks"),
                           ("random-suite", "full randomized invariant battery")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("--seed", type=int, default=42)
        sp.add_argument("--instances", type=int, default=1000)
    return p


def _resolve_output(path: str) -> str:
    if path == "-":
        return path
    base = os.environ.get(OUTPUT_DIR_ENV)
    p = Path(path)
    if base and not p.is_absolute():
        p = Path(base) / p
    return str(p)


def write_atomic(path: str, text: str) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=p.parent, prefix=f".{p.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, p)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        write_atomic(path, text)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([fmt(v) if isinstance(v, float) else v for v in r])
    return buf.getvalue()


def _json_text(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _sweep_text(res, axis: str, names: list[str], fmt_: str) -> str:
    if fmt_ == "csv":
        return _csv_text([axis] + names, res.rows(names))
    doc = {"axis": axis, "grid": [_round(g) for g in res.grid],
           "columns": {n: [_round(v) for v in res.columns[n]] for n in names}}
    return _json_text(doc)


def _rel_outside(lo: float, v: float, hi: float) -> float:
    return max(lo - v, v - hi, 0.0) / max(1.0, abs(v))


def run_fig1(args, tol) -> tuple[str, list[str]]:
    if args.grid_points < 2:
        raise ConfigError("--grid-points must be at least 2")
    res = sweep_abs_a(fixture_fig1(), abs_a_grid(args.grid_points))
    c = res.columns
    bad = []
    for i, g in enumerate(res.grid):
        if _rel_outside(c["lower"][i], c["sov"][i], c["upper"][i]) > tol["sandwich"]:
            bad.append(f"row {i} (abs_a={fmt(g)}): sandwich violated")
    for i in (0, len(res) - 1):
        gap = max(c["upper"][i] - c["sov"][i], c["sov"][i] - c["lower"][i])
        if gap > tol["sandwich"] * max(1.0, c["sov"][i]):
            bad.append(f"row {i} (abs_a={fmt(res.grid[i])}): endpoint not saturated")
    return _sweep_text(res, "abs_a", FIG1_COLUMNS, args.format or "csv"), bad


def run_fig2(args, tol) -> tuple[str, list[str]]:
    if args.grid_points < 2:
        raise ConfigError("--grid-points must be at least 2")
    lo, hi = args.theta_range
    if hi < lo:
        raise ConfigError("--theta-range must be nondecreasing")
    res = sweep_theta(fixture_fig2(), theta_grid(args.grid_points, lo, hi))
    c = res.columns
    bad = [f"row {i} (theta={fmt(g)}): sandwich violated"
           for i, g in enumerate(res.grid)
           if _rel_outside(c["lb"][i], c["sov"][i], c["ub"][i]) > tol["sandwich"]]
    return _sweep_text(res, "theta", FIG2_COLUMNS, args.format or "csv"), bad


def run_compare(args, tol) -> tuple[str, list[str]]:
    try:
        if args.input == "-":
            doc = json.load(sys.stdin)
        else:
            with open(args.input) as fh:
                doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputSchemaError(f"invalid JSON: {exc}") from exc
    except OSError as exc:
        raise ConfigError(str(exc)) from exc
    kwargs = decode_instance(doc)
    rep = compare_bounds(**kwargs, tol=tol["sandwich"])
    bad = [f"bound {name}: check failed" for name in rep.failures()]
    d = rep.to_dict()
    if (args.format or "json") == "csv":
        rows = [["sov", d["sov"]], ["weighted_sov", d["weighted_sov"]]]
        rows += [[k, v] for k, v in sorted(d["bounds"].items())]
        rows += [[k, v] for k, v in sorted(d["residues"].items())]
        return _csv_text(["quantity", "value"], rows), bad
    return _json_text(_round_tree(d)), bad


def _round_tree(x):
    if isinstance(x, float):
        return _round(x)
    if isinstance(x, dict):
        return {k: _round_tree(v) for k, v in x.items()}
    if isinstance(x, list):
        return [_round_tree(v) for v in x]
    return x


def run_suite(args, tol) -> tuple[str, list[str]]:
    if args.instances < 1:
        raise ConfigError("--instances must be positive")
    detailed = args.command == "random-suite"
    fn = run_random_suite if detailed else run_verify
    res = fn(args.seed, args.instances, tol)
    summary = res.summary(detailed=detailed)
    bad = [f"instance {i}: invariant check failed" for i in res.failed_instances]
    if (args.format or "json") == "csv":
        rows = [[k, c.count, c.failures, c.max_residual] for k, c in sorted(res.checks.items())]
        return _csv_text(["check", "count", "failures", "max_residual"], rows), bad
    return _json_text(summary), bad


COMMANDS = {"fig1": run_fig1, "fig2": run_fig2, "compare": run_compare,
            "verify": run_suite, "random-suite": run_suite}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        tol = _parse_tol(args.tol)
        text, bad = COMMANDS[args.command](args, tol)
        _emit(text, _resolve_output(args.output))
    except (ConfigError, InputSchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BoundsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if bad:
        for line in bad:
            print(f"invariant violation: {line}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
