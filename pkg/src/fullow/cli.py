"""Command-line front end: ``fullow solve``, ``fullow bench``, ``fullow profile``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import harness
from .core import BudgetTooSmall, IterationType
from .problems import NOISE_KINDS, VARIANTS, get_problem

SUITES = ("smooth53", "piecewise53", "scalable") + NOISE_KINDS


def _parse_set(items):
    out = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"--set expects key=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def _tau(text):
    v = float(text)
    if not 0 < v < 1:
        raise argparse.ArgumentTypeError("tau must lie in (0, 1)")
    return v


def cmd_solve(args) -> int:
    try:
        problem = get_problem(args.problem, args.variant, args.eps_f)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    budget = args.budget if args.budget is not None else 2000 * problem.n
    try:
        cfg = harness.config_from_overrides(budget, args.seed, _parse_set(args.set))
        res = harness.run_solver(problem, args.solver, cfg)
    except BudgetTooSmall as exc:
        print(f"error: budget too small: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = Path(args.out) if args.out else (
        harness.default_output_dir() / f"{problem.name}__{args.variant}__{args.solver}__{args.seed}.history.csv")
    out.parent.mkdir(parents=True, exist_ok=True)
    harness.write_history(out, res.history.pairs())
    n_full = res.log.count(IterationType.FULL)
    n_low = res.log.count(IterationType.LOW)
    print(f"problem      {problem.name} (n={problem.n}, {args.variant})")
    print(f"solver       {args.solver}")
    print(f"f0           {res.history.f0!r}")
    print(f"best f       {res.f_best!r}")
    print(f"evaluations  {res.evals_used} / {budget}")
    print(f"iterations   {len(res.log)} (full-eval {n_full}, low-eval {n_low})")
    print(f"history      {out}")
    return 0


def cmd_bench(args) -> int:
    budget_mult = args.budget_multiplier
    if budget_mult is None:
        budget_mult = 100 if args.budget_kind == "data" else 2000
    try:
        runs = harness.bench(
            args.suite, solvers=args.solvers, seeds=args.seeds, budget_multiplier=budget_mult,
            budget_kind=args.budget_kind, eps_f=args.eps_f, n=args.n, workers=args.workers,
            overrides=_parse_set(args.set),
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = Path(args.out) if args.out else harness.default_output_dir() / f"{args.suite}.results.csv"
    harness.write_results(out, runs)
    failed = sum(1 for row, _ in runs if row["evals_used"] == 0)
    print(f"wrote {len(runs)} rows to {out}" + (f" ({failed} failed)" if failed else ""))
    return 0


def cmd_profile(args) -> int:
    try:
        runs = []
        for path in args.results:
            runs.extend(harness.read_results(path))
        alphas, profile, summary = harness.compute_profiles(
            runs, args.tau, args.kind, fl_multiplier=args.fl_budget_multiplier,
            data_multiplier=args.data_budget_multiplier)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    prefix = Path(args.out_prefix) if args.out_prefix else (
        harness.default_output_dir() / f"{args.kind}_tau{args.tau:g}")
    prefix.parent.mkdir(parents=True, exist_ok=True)
    csv_path = prefix.with_name(prefix.name + ".profile.csv")
    json_path = prefix.with_name(prefix.name + ".summary.json")
    harness.write_profile_csv(csv_path, alphas, profile)
    json_path.write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    for s, vals in summary["solvers"].items():
        print(f"{s:10s} rho(1)={vals['at_1']:.3f} rho(2)={vals['at_2']:.3f} "
              f"final={vals['final']:.3f} area={vals['area']:.3f}")
    print(f"wrote {csv_path} and {json_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fullow", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run one solver on one problem")
    p.add_argument("problem")
    p.add_argument("variant", choices=VARIANTS)
    p.add_argument("solver", choices=harness.SOLVERS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None, help="default 2000n")
    p.add_argument("--eps-f", type=float, default=1e-3)
    p.add_argument("--set", action="append", metavar="KEY=VALUE",
                   help="override a solver constant, e.g. --set c=1e-3")
    p.add_argument("--out", default=None, help="history CSV path")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="run a benchmark sweep and write a results CSV")
    p.add_argument("--suite", choices=SUITES, default="smooth53")
    p.add_argument("--solvers", nargs="+", choices=harness.SOLVERS, default=list(harness.SOLVERS))
    p.add_argument("--seeds", nargs="+", type=int, default=[0])
    p.add_argument("--budget-kind", choices=("performance", "data"), default="performance",
                   help="performance: multiplier*n (2000); data: multiplier*(n+1) (100)")
    p.add_argument("--budget-multiplier", type=int, default=None)
    p.add_argument("--eps-f", type=float, default=1e-3)
    p.add_argument("--n", type=int, default=40, help="dimension of the scalable suite")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--set", action="append", metavar="KEY=VALUE")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("profile", help="performance or data profiles from results CSVs")
    p.add_argument("results", nargs="+")
    p.add_argument("--tau", type=_tau, required=True)
    p.add_argument("--kind", choices=("performance", "data"), default="performance")
    p.add_argument("--fl-budget-multiplier", type=int, default=2000)
    p.add_argument("--data-budget-multiplier", type=int, default=100)
    p.add_argument("--out-prefix", default=None)
    p.set_defaults(func=cmd_profile)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
