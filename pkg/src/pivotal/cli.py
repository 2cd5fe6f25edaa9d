"""Command-line front end.

Subcommands: analyze, check, sweep, tail, estimate.  Reports are JSON,
sweeps and tails are plot-ready CSV; `--plot FILE.png` additionally renders
a matplotlib figure next to the delimited output.  Exit codes: 0 all
applicable checks hold, 1 a check failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .checks import exact_tail, hoeffding_bound, run_suite
from .core import (
    MAX_EXACT_N,
    BooleanFunction,
    FunctionOracle,
    PivotalError,
    is_monotone,
    load_table,
    weight_enumerator,
)
from .expr import as_oracle, compile_expr, parse, to_text
from .influence import conditional_stats, total_influence
from .measure import expectation, mean_derivative
from .sampling import (
    GENERATOR_ID,
    estimate_influence,
    estimate_mean,
    estimate_total_influence,
)

DEFAULT_GRID = "0.1:0.9:9"


def fmt(x: float) -> str:
    return "%.17g" % x


def parse_grid(text: str) -> list[float]:
    try:
        a_s, b_s, steps_s = text.split(":")
        a, b, steps = float(a_s), float(b_s), int(steps_s)
    except ValueError:
        raise PivotalError(f"bad grid {text!r}, expected a:b:steps") from None
    if not (0.0 < a < b < 1.0):
        raise PivotalError(f"bad grid range: need 0 < {a} < {b} < 1")
    if steps < 2:
        raise PivotalError("grid needs at least 2 steps")
    return [a + (b - a) * k / (steps - 1) for k in range(steps)]


def load_input(args) -> tuple[BooleanFunction, str]:
    if args.table:
        f = load_table(args.table)
        return f, args.table
    e = parse(args.expr)
    return compile_expr(e), to_text(e)


def load_oracle(args) -> FunctionOracle:
    if args.table:
        f = load_table(args.table)
        return FunctionOracle(f.n, f.eval, origin=args.table)
    return as_oracle(parse(args.expr))


def write_output(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def to_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def check_rows_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check", "p", "lhs", "rhs", "slack", "holds", "applicable",
                     "notes"])
    for p, r in rows:
        writer.writerow([r.name, fmt(p), fmt(r.lhs), fmt(r.rhs), fmt(r.slack),
                         str(r.holds).lower(), str(r.applicable).lower(), r.notes])
    return buf.getvalue()


def check_row_dict(p, r) -> dict:
    return {
        "check": r.name,
        "p": p,
        "lhs": r.lhs,
        "rhs": r.rhs,
        "slack": r.slack,
        "holds": r.holds,
        "applicable": r.applicable,
        "notes": r.notes,
    }


def function_descriptor(f: BooleanFunction, origin: str) -> dict:
    return {
        "origin": origin,
        "n": f.n,
        "monotone": is_monotone(f),
        "weight_enumerator": list(weight_enumerator(f)),
    }


def any_failure(rows) -> bool:
    return any(r.applicable and not r.holds for _, r in rows)


# ---------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    f, origin = load_input(args)
    p = args.p
    if not 0.0 < p < 1.0:
        raise PivotalError(f"analysis requires p strictly inside (0, 1), got {p}")
    profile = total_influence(f, p)
    report = {
        "schema_version": 1,
        "tool": {"name": "pivotal", "version": __version__},
        "function": function_descriptor(f, origin),
        "p": p,
        "mean": expectation(f, p),
        "influence": {"per_coord": list(profile.per_coord), "total": profile.total},
    }
    try:
        stats = conditional_stats(f, p)
        report["conditional"] = {
            "prob_one": stats.prob_one,
            "cond_pivotal": stats.cond_pivotal,
            "cond_sn": stats.cond_sn,
            "cond_xi": list(stats.cond_xi),
        }
    except PivotalError:
        report["conditional"] = None
    rows = sorted(run_suite(f, [p]), key=lambda t: (t[1].name, t[0]))
    report["checks"] = [check_row_dict(p, r) for p, r in rows]
    write_output(to_json(report), args.out)
    if args.plot:
        from .plots import render_profile

        render_profile(profile.per_coord, args.plot, title=origin)
    return 1 if any_failure(rows) else 0


def cmd_check(args) -> int:
    f, origin = load_input(args)
    grid = parse_grid(args.p_grid)
    rows = sorted(run_suite(f, grid), key=lambda t: (t[1].name, t[0]))
    if args.format == "json":
        report = {
            "schema_version": 1,
            "tool": {"name": "pivotal", "version": __version__},
            "function": function_descriptor(f, origin),
            "checks": [check_row_dict(p, r) for p, r in rows],
        }
        write_output(to_json(report), args.out)
    else:
        write_output(check_rows_csv(rows), args.out)
    return 1 if any_failure(rows) else 0


def cmd_sweep(args) -> int:
    f, origin = load_input(args)
    grid = parse_grid(args.p_grid)
    rows = []
    for p in grid:
        profile = total_influence(f, p)
        rows.append((p, expectation(f, p), mean_derivative(f, p), profile.total))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p", "mean", "dmean_dp", "total_influence"])
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    write_output(buf.getvalue(), args.out)
    if args.plot:
        from .plots import render_sweep

        render_sweep(rows, args.plot, title=origin)
    return 0


def cmd_tail(args) -> int:
    if not 0.0 < args.p < 1.0:
        raise PivotalError(f"tail computation requires p in (0, 1), got {args.p}")
    rows = []
    for u in args.u or []:
        point = exact_tail(args.n, args.p, u)
        rows.append((u, point.exact, point.bound,
                     hoeffding_bound(args.n, args.p, u, "proved")))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["u", "exact", "bound_stated", "bound_proved"])
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    write_output(buf.getvalue(), args.out)
    if args.plot and rows:
        from .plots import render_tail

        render_tail(rows, args.plot, title=f"n={args.n}, p={args.p}")
    return 0


def cmd_estimate(args) -> int:
    oracle = load_oracle(args)
    estimates = []
    est = estimate_mean(oracle, args.p, args.m, args.delta, args.seed)
    estimates.append(("mean", None, est))
    for i in args.coord or []:
        est = estimate_influence(oracle, i, args.p, args.m, args.delta, args.seed)
        estimates.append(("influence", i, est))
    if args.total:
        est = estimate_total_influence(oracle, args.p, args.m, args.delta,
                                       args.seed)
        estimates.append(("total_influence", None, est))
    report = {
        "schema_version": 1,
        "tool": {"name": "pivotal", "version": __version__},
        "function": {"origin": oracle.origin, "n": oracle.n},
        "p": args.p,
        "generator": GENERATOR_ID,
        "seed": args.seed,
        "samples": args.m,
        "delta": args.delta,
        "estimates": [
            {
                "kind": kind,
                "coord": coord,
                "mean": est.mean,
                "half_width": est.half_width,
                "ci": [est.mean - est.half_width, est.mean + est.half_width],
                "notes": est.notes,
            }
            for kind, coord, est in estimates
        ],
    }
    write_output(to_json(report), args.out)
    return 0


# ---------------------------------------------------------------------------


def add_input_flags(sub, required=True):
    group = sub.add_mutually_exclusive_group(required=required)
    group.add_argument("--table", help="truth-table file (n=<k> header line)")
    group.add_argument("--expr", help="expression, e.g. 'MAJ(x1, x2, x3)'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pivotal",
        description="Influence and pivotal-set analysis of Boolean functions",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("analyze", help="full report at one bias value")
    add_input_flags(sub)
    sub.add_argument("--p", type=float, required=True)
    sub.add_argument("--out")
    sub.add_argument("--plot", help="write an influence-profile figure (PNG)")
    sub.set_defaults(func=cmd_analyze)

    sub = subs.add_parser("check", help="run the inequality suite over a p grid")
    add_input_flags(sub)
    sub.add_argument("--p-grid", default=DEFAULT_GRID, metavar="a:b:steps")
    sub.add_argument("--format", choices=["csv", "json"], default="csv")
    sub.add_argument("--out")
    sub.set_defaults(func=cmd_check)

    sub = subs.add_parser("sweep", help="mean, derivative and influence vs p")
    add_input_flags(sub)
    sub.add_argument("--p-grid", default=DEFAULT_GRID, metavar="a:b:steps")
    sub.add_argument("--out")
    sub.add_argument("--plot", help="write a sweep figure (PNG)")
    sub.set_defaults(func=cmd_sweep)

    sub = subs.add_parser("tail", help="exact binomial tail vs sub-Gaussian bound")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--p", type=float, required=True)
    sub.add_argument("--u", type=float, action="append", default=[])
    sub.add_argument("--out")
    sub.add_argument("--plot", help="write a tail figure (PNG)")
    sub.set_defaults(func=cmd_tail)

    sub = subs.add_parser("estimate", help="seeded sampling estimates beyond "
                          f"the exact cap (n > {MAX_EXACT_N})")
    add_input_flags(sub)
    sub.add_argument("--p", type=float, required=True)
    sub.add_argument("--m", type=int, required=True, help="sample count")
    sub.add_argument("--delta", type=float, default=0.05)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--coord", type=int, action="append",
                     help="estimate the influence of this coordinate (repeatable)")
    sub.add_argument("--total", action="store_true",
                     help="estimate the total influence")
    sub.add_argument("--out")
    sub.set_defaults(func=cmd_estimate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (PivotalError, OSError) as exc:
        print(f"pivotal: error: {exc}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
