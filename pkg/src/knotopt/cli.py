"""Command-line front end.

Subcommands:
  run        catalog experiments, one row per curve and knot count
  solve      optimise a single curve and print the resulting knots
  check      first-order optimality diagnostic at given knot positions
  plot-data  sample a curve and its interpolant to CSV for plotting

The default seed is 42; the environment variable KNOTOPT_SEED overrides it
and an explicit --seed flag wins over both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .curves import default_catalog, load_catalog
from .harness import (DEFAULT_KNOT_COUNTS, ExperimentSpec, emit_plot_data,
                      run_catalog, run_experiment, rows_to_csv, rows_to_json)
from .kkt import kkt_check, prop1_test
from .objective import ObjectiveKind
from .pl import KnotVector
from .spg import Backtrack, BbRule, SpgConfig

DEFAULT_SEED = 42


def _default_seed() -> int:
    env = os.environ.get("KNOTOPT_SEED")
    return int(env) if env else DEFAULT_SEED


def _load(args):
    return default_catalog() if args.catalog is None else load_catalog(args.catalog)


def _entry(catalog, name: str):
    for entry in catalog:
        if entry.name == name:
            return entry
    raise SystemExit(f"error: curve {name!r} not in catalog")


def _config(args) -> SpgConfig:
    seed = args.seed if args.seed is not None else _default_seed()
    return SpgConfig(rng_seed=seed,
                     bb_rule=BbRule(args.bb),
                     backtrack=Backtrack(args.backtrack))


def _solver_flags(parser):
    parser.add_argument("--seed", type=int, default=None,
                        help=f"RNG seed (default {DEFAULT_SEED}, env KNOTOPT_SEED)")
    parser.add_argument("--bb", choices=[r.value for r in BbRule], default="bb1",
                        help="Barzilai-Borwein step rule")
    parser.add_argument("--backtrack", choices=[m.value for m in Backtrack],
                        default="random", help="line-search shrink rule")


def _cmd_run(args) -> int:
    curves = args.curves.split(",") if args.curves else None
    knot_counts = tuple(int(v) for v in args.knots.split(",")) if args.knots \
        else DEFAULT_KNOT_COUNTS
    spec_config = _config(args)
    # validate names before any work so a bad filter writes nothing
    if curves:
        for name in curves:
            ExperimentSpec(curve_name=name, knot_counts=knot_counts,
                           measure=args.measure, solver_config=spec_config)
    try:
        rows = run_catalog(catalog_path=args.catalog, curves=curves,
                           knot_counts=knot_counts, measure=args.measure,
                           config=spec_config, out_path=args.out, fmt=args.format)
    except KeyError as exc:
        raise SystemExit(f"error: {exc.args[0]}")
    if args.out is None:
        sys.stdout.write(rows_to_csv(rows) if args.format == "csv"
                         else rows_to_json(rows))
    else:
        print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def _cmd_solve(args) -> int:
    catalog = _load(args)
    name = args.curves
    entry = _entry(catalog, name)
    n = int(args.knots) if args.knots else DEFAULT_KNOT_COUNTS[0]
    config = _config(args)
    rng = np.random.default_rng([config.rng_seed, 0])
    row = run_experiment(entry, n, args.measure, config, rng=rng)
    record = {
        "curve": name, "a": entry.a, "b": entry.b, "n_knots": n,
        "measure": row.measure,
        "orig_error": row.orig_error, "spg_error": row.spg_error,
        "reduction_pct": row.reduction_pct, "iterations": row.iterations,
        "termination": row.termination, "status": row.status,
        "knots": row.final_knots.tolist(),
    }
    text = json.dumps(record, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_check(args) -> int:
    catalog = _load(args)
    entry = _entry(catalog, args.curves)
    if not args.knots:
        raise SystemExit("error: check needs --knots with comma-separated positions")
    xs = np.sort(np.array([float(v) for v in args.knots.split(",")]))
    knots = KnotVector(entry.a, entry.b, xs)
    kind = (ObjectiveKind.GENERAL_SQUARED if args.measure == "general"
            else ObjectiveKind.CONCAVE_AREA)
    report = kkt_check(entry.curve, knots, kind)
    record = report.to_dict()
    if kind is ObjectiveKind.CONCAVE_AREA:
        try:
            holds, margins = prop1_test(entry.curve, knots)
            record["prop1_holds"] = holds
            record["prop1_margins"] = margins.tolist()
        except ValueError as exc:
            record["prop1_holds"] = None
            record["prop1_note"] = str(exc)
    text = json.dumps(record, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_plot_data(args) -> int:
    catalog = _load(args)
    entry = _entry(catalog, args.curves)
    if not args.out:
        raise SystemExit("error: plot-data needs --out")
    spec = args.knots or str(DEFAULT_KNOT_COUNTS[0])
    if "," in spec or "." in spec:
        xs = np.sort(np.array([float(v) for v in spec.split(",")]))
        knots = KnotVector(entry.a, entry.b, xs)
    else:
        config = _config(args)
        rng = np.random.default_rng([config.rng_seed, 0])
        row = run_experiment(entry, int(spec), args.measure, config, rng=rng)
        knots = KnotVector(entry.a, entry.b, row.final_knots[1:-1])
    emit_plot_data(entry.curve, knots, args.out)
    print(f"wrote plot data to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotopt",
        description="Optimal knot placement for piecewise-linear approximation")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run catalog experiments")
    run.add_argument("--catalog", default=None, help="catalog CSV (default: bundled)")
    run.add_argument("--curves", default=None, help="comma-separated curve names")
    run.add_argument("--knots", default=None, help="comma-separated knot counts")
    run.add_argument("--measure", choices=["auto", "concave", "general"],
                     default="auto")
    run.add_argument("--out", default=None, help="output file path")
    run.add_argument("--format", choices=["csv", "json"], default="csv")
    _solver_flags(run)
    run.set_defaults(func=_cmd_run)

    solve = sub.add_parser("solve", help="optimise knots for one curve")
    solve.add_argument("--catalog", default=None)
    solve.add_argument("--curves", required=True, help="curve name")
    solve.add_argument("--knots", default=None, help="number of knots")
    solve.add_argument("--measure", choices=["auto", "concave", "general"],
                       default="auto")
    solve.add_argument("--out", default=None)
    _solver_flags(solve)
    solve.set_defaults(func=_cmd_solve)

    check = sub.add_parser("check", help="KKT diagnostic at given knots")
    check.add_argument("--catalog", default=None)
    check.add_argument("--curves", required=True, help="curve name")
    check.add_argument("--knots", required=True,
                       help="comma-separated knot positions")
    check.add_argument("--measure", choices=["concave", "general"],
                       default="concave")
    check.add_argument("--out", default=None)
    _solver_flags(check)
    check.set_defaults(func=_cmd_check)

    plot = sub.add_parser("plot-data", help="sample curve and interpolant to CSV")
    plot.add_argument("--catalog", default=None)
    plot.add_argument("--curves", required=True, help="curve name")
    plot.add_argument("--knots", default=None,
                      help="knot count (optimised) or comma-separated positions")
    plot.add_argument("--measure", choices=["auto", "concave", "general"],
                      default="auto")
    plot.add_argument("--out", required=True)
    _solver_flags(plot)
    plot.set_defaults(func=_cmd_plot_data)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
