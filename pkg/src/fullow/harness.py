"""Benchmark runs and the versioned CSV formats shared with external solvers."""

from __future__ import annotations

import csv
import io
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import fields, replace
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from . import profiles as pf
from .core import SolverConfig
from .driver import solve, solve_ablation
from .problems import get_problem, suite

logger = logging.getLogger(__name__)

SCHEMA = "schema=1"
RESULT_COLUMNS = ("problem", "n", "variant", "eps_f", "solver", "seed", "budget",
                  "evals_used", "best_f", "f0")
HISTORY_COLUMNS = ("eval_index", "best_f")
SOLVERS = ("fullow", "bfgs-fd", "pds")
OUTPUT_ENV = "FULLOW_OUTPUT_DIR"


def fmt(v) -> str:
    if isinstance(v, float):
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return repr(v)
    return str(v)


def run_solver(problem, solver: str, cfg: SolverConfig):
    if solver == "fullow":
        return solve(problem, cfg)
    if solver == "bfgs-fd":
        return solve_ablation(problem, cfg, "full-only")
    if solver == "pds":
        return solve_ablation(problem, cfg, "low-only")
    raise ValueError(f"unknown solver {solver!r}; expected one of {SOLVERS}")


def config_from_overrides(budget: int, seed: int, overrides: Optional[dict] = None) -> SolverConfig:
    cfg = SolverConfig(budget=budget, seed=seed)
    if not overrides:
        return cfg
    types = {f.name: f.type for f in fields(SolverConfig)}
    parsed = {}
    for key, raw in overrides.items():
        if key not in types:
            raise ValueError(f"unknown configuration key {key!r}")
        if isinstance(raw, str):
            if key == "criticality_enabled":
                raw = raw.lower() in ("1", "true", "yes", "on")
            elif key in ("criticality_max_iter", "budget", "seed", "max_backtracks"):
                raw = int(raw)
            else:
                raw = float(raw)
        parsed[key] = raw
    return replace(cfg, **parsed)


def history_name(row: dict) -> str:
    eps = fmt(float(row["eps_f"]))
    return f"{row['problem']}__{row['variant']}__{eps}__{row['solver']}__{row['seed']}.csv"


def histories_dir(results_path) -> Path:
    p = Path(results_path)
    return p.with_name(p.name + ".histories")


def _bench_task(args):
    name, variant, eps_f, solver, seed, budget_mult, budget_kind, overrides = args
    problem = get_problem(name, variant, eps_f)
    n = problem.n
    budget = budget_mult * (n + 1) if budget_kind == "data" else budget_mult * n
    row = {"problem": name, "n": n, "variant": variant,
           "eps_f": float(eps_f if problem.noise is not None else 0.0),
           "solver": solver, "seed": seed, "budget": budget}
    try:
        cfg = config_from_overrides(budget, seed, overrides)
        res = run_solver(problem, solver, cfg)
    except Exception as exc:  # noqa: BLE001 - a failing run must not stop the sweep
        logger.error("run %s/%s/%s failed: %s", name, solver, seed, exc)
        row.update(evals_used=0, best_f=math.inf, f0=math.nan)
        return row, []
    row.update(evals_used=res.evals_used, best_f=float(res.f_best), f0=float(res.history.f0))
    return row, res.history.pairs()


def bench(suite_name: str, solvers: Iterable[str] = SOLVERS, seeds: Iterable[int] = (0,),
          budget_multiplier: int = 2000, budget_kind: str = "performance", eps_f: float = 1e-3,
          n: int = 40, workers: int = 1, overrides: Optional[dict] = None):
    """Run every (problem, solver, seed) triple; rows sorted by problem, solver, seed."""
    solvers = list(solvers)
    for s in solvers:
        if s not in SOLVERS:
            raise ValueError(f"unknown solver {s!r}; expected one of {SOLVERS}")
    problems = suite(suite_name, eps_f=eps_f, n=n)
    tasks = [(p.name, p.variant, eps_f, s, int(seed), budget_multiplier, budget_kind, overrides)
             for p in problems for s in solvers for seed in seeds]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            out = list(pool.map(_bench_task, tasks, chunksize=4))
    else:
        out = [_bench_task(t) for t in tasks]
    out.sort(key=lambda rh: (rh[0]["problem"], rh[0]["solver"], rh[0]["seed"]))
    return out


def write_results(path, runs) -> None:
    """Write the results CSV and one history file per run next to it."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    hdir = histories_dir(path)
    hdir.mkdir(exist_ok=True)
    with open(path, "w", newline="") as fh:
        fh.write(f"# {SCHEMA}\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(RESULT_COLUMNS)
        for row, hist in runs:
            w.writerow([fmt(row[c]) for c in RESULT_COLUMNS])
            write_history(hdir / history_name(row), hist)


def write_history(path, pairs) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(f"# {SCHEMA}\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(HISTORY_COLUMNS)
        for e, f in pairs:
            w.writerow([int(e), fmt(float(f))])


def _read_table(path, columns):
    with open(path, newline="") as fh:
        text = fh.read()
    lines = text.splitlines()
    if not lines or lines[0].strip() != f"# {SCHEMA}":
        raise ValueError(f"{path}: missing '# {SCHEMA}' header line")
    reader = csv.DictReader(io.StringIO("\n".join(lines[1:])))
    if tuple(reader.fieldnames or ()) != tuple(columns):
        raise ValueError(f"{path}: expected columns {columns}, got {reader.fieldnames}")
    return list(reader)


def read_history(path):
    return [(int(r["eval_index"]), float(r["best_f"])) for r in _read_table(path, HISTORY_COLUMNS)]


def read_results(path):
    """Parse a results CSV and attach each run's history."""
    hdir = histories_dir(path)
    runs = []
    for r in _read_table(path, RESULT_COLUMNS):
        row = {
            "problem": r["problem"], "n": int(r["n"]), "variant": r["variant"],
            "eps_f": float(r["eps_f"]), "solver": r["solver"], "seed": int(r["seed"]),
            "budget": int(r["budget"]), "evals_used": int(r["evals_used"]),
            "best_f": float(r["best_f"]), "f0": float(r["f0"]),
        }
        hpath = hdir / history_name(row)
        if not hpath.exists():
            raise FileNotFoundError(f"history file {hpath} missing")
        row["history"] = read_history(hpath)
        runs.append(row)
    return runs


def default_output_dir() -> Path:
    return Path(os.environ.get(OUTPUT_ENV, "."))


def compute_profiles(runs, tau: float, kind: str = "performance", fl_multiplier: int = 2000,
                     data_multiplier: int = 100):
    """Profiles averaged over seeds, plus a JSON-ready summary.

    Runs are grouped by seed; a solver present with a single seed only (for
    example a deterministic external solver) is reused for every seed group.
    fL is recomputed per seed group across all solvers present.
    """
    if not 0 < tau < 1:
        raise ValueError("tau must lie in (0, 1)")
    if kind not in ("performance", "data"):
        raise ValueError("kind must be 'performance' or 'data'")
    if not runs:
        raise ValueError("no runs given")
    variants = {(r["variant"], r["eps_f"]) for r in runs}
    if len(variants) != 1:
        raise ValueError(f"runs mix problem variants {sorted(variants)}")
    solvers = sorted({r["solver"] for r in runs})
    problem_sets = {s: {r["problem"] for r in runs if r["solver"] == s} for s in solvers}
    common = set.intersection(*problem_sets.values())
    if not common:
        raise ValueError("solvers share no problems")
    if any(ps != common for ps in problem_sets.values()):
        raise ValueError("solvers were run on different problem sets")

    seeds_of = {s: sorted({r["seed"] for r in runs if r["solver"] == s}) for s in solvers}
    seeds = sorted({seed for s in solvers for seed in seeds_of[s] if len(seeds_of[s]) > 1}
                   or {seed for s in solvers for seed in seeds_of[s]})
    nmax = max(r["n"] for r in runs)
    if kind == "performance":
        alphas = pf.performance_grid()
    else:
        alphas = pf.data_grid(float(data_multiplier))

    acc = {s: np.zeros(alphas.size) for s in solvers}
    solved = {s: 0.0 for s in solvers}
    for seed in seeds:
        group = []
        for s in solvers:
            use = seed if seed in seeds_of[s] else seeds_of[s][0]
            if seed not in seeds_of[s] and len(seeds_of[s]) > 1:
                raise ValueError(f"solver {s!r} has no run for seed {seed}")
            group += [r for r in runs if r["solver"] == s and r["seed"] == use]
        cutoff = data_multiplier if kind == "data" else None
        pm = pf.build_matrix(group, solvers, tau, fl_multiplier, cutoff)
        prof = (pf.performance_profile(pm, alphas) if kind == "performance"
                else pf.data_profile(pm, alphas))
        for j, s in enumerate(solvers):
            acc[s] += prof[s]
            solved[s] += float(np.isfinite(pm.t[:, j]).mean())
    profile = {s: acc[s] / len(seeds) for s in solvers}
    summary = {
        "schema": 1,
        "kind": kind,
        "tau": tau,
        "variant": next(iter(variants))[0],
        "eps_f": next(iter(variants))[1],
        "fL_budget": f"{fl_multiplier}n",
        "t_budget": f"{data_multiplier}(n+1)" if kind == "data" else f"{fl_multiplier}n",
        "seeds": seeds,
        "n_problems": len(common),
        "max_dimension": nmax,
        "solved_fraction": {s: solved[s] / len(seeds) for s in solvers},
        "solvers": pf.summarize(profile, alphas),
    }
    return alphas, profile, summary


def write_profile_csv(path, alphas, profile) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(f"# {SCHEMA}\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("alpha", "solver", "value"))
        for s in sorted(profile):
            for a, v in zip(alphas, profile[s]):
                w.writerow((fmt(float(a)), s, fmt(float(v))))
