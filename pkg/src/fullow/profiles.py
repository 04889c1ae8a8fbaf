"""Convergence test, evaluations-to-convergence, performance and data profiles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass
class ProfileMatrix:
    """Evaluations-to-convergence per problem (rows) and solver (columns).

    ``t`` holds positive counts or ``inf`` for failures.
    """

    problems: list  # (name, n_p, f0_p, fL_p)
    solvers: list
    t: np.ndarray

    def __post_init__(self):
        self.t = np.asarray(self.t, dtype=float)
        if self.t.shape != (len(self.problems), len(self.solvers)):
            raise ValueError("t must have shape (len(problems), len(solvers))")
        if np.any(self.t <= 0):
            raise ValueError("evaluation counts must be positive")

    @property
    def dims(self) -> np.ndarray:
        return np.array([p[1] for p in self.problems], dtype=float)


def evals_to_convergence(history, f0: float, fL: float, tau: float) -> float:
    """First evaluation index with f0 - best_f >= (1 - tau)(f0 - fL); inf if none.

    ``history`` is a RunHistory or a sequence of (eval_index, best_f) pairs.
    """
    if not 0 < tau < 1:
        raise ValueError("tau must lie in (0, 1)")
    if f0 < fL:
        raise ValueError(f"f0={f0!r} is below fL={fL!r}")
    pairs = history.pairs() if hasattr(history, "pairs") else list(history)
    if not pairs:
        raise ValueError("empty history")
    need = (1.0 - tau) * (f0 - fL)
    for e, f in pairs:
        if f0 - f >= need:
            return float(e)
    return math.inf


def performance_ratios(pm: ProfileMatrix) -> np.ndarray:
    """r_{p,s} = t_{p,s} / min_s t_{p,s}; rows without any finite entry are all inf."""
    t = pm.t
    best = t.min(axis=1, keepdims=True)
    with np.errstate(invalid="ignore"):
        r = np.where(np.isfinite(best), t / best, np.inf)
    return r


def performance_profile(pm: ProfileMatrix, alphas: Iterable[float]) -> dict:
    """Fraction of problems with r_{p,s} <= alpha, per solver, on the given grid."""
    alphas = np.asarray(list(alphas), dtype=float)
    r = performance_ratios(pm)
    n_p = r.shape[0]
    return {s: (r[:, j][None, :] <= alphas[:, None]).sum(axis=1) / n_p
            for j, s in enumerate(pm.solvers)}


def data_profile(pm: ProfileMatrix, alphas: Iterable[float]) -> dict:
    """Fraction of problems with t_{p,s} / (n_p + 1) <= alpha, per solver."""
    alphas = np.asarray(list(alphas), dtype=float)
    scaled = pm.t / (pm.dims + 1.0)[:, None]
    n_p = scaled.shape[0]
    return {s: (scaled[:, j][None, :] <= alphas[:, None]).sum(axis=1) / n_p
            for j, s in enumerate(pm.solvers)}


def performance_grid(max_log2: int = 10, points_per_octave: int = 8) -> np.ndarray:
    return 2.0 ** np.linspace(0.0, max_log2, max_log2 * points_per_octave + 1)


def data_grid(max_units: float, step: float = 1.0) -> np.ndarray:
    return np.arange(0.0, max_units + step / 2, step)


def build_matrix(runs: Sequence[dict], solvers: Sequence[str], tau: float,
                 fl_budget_multiplier: int = 2000, cutoff_multiplier=None) -> ProfileMatrix:
    """Assemble a ProfileMatrix from run records.

    Each record has keys ``problem``, ``n``, ``solver``, ``f0`` and
    ``history`` (pairs). fL is the lowest value any solver reached within
    ``fl_budget_multiplier * n`` evaluations; t is counted only up to
    ``cutoff_multiplier * (n + 1)`` evaluations when given (data-profile
    budgets), else up to ``fl_budget_multiplier * n``.
    """
    by_problem: dict = {}
    for run in runs:
        by_problem.setdefault(run["problem"], {})[run["solver"]] = run
    problems, rows = [], []
    for name in sorted(by_problem):
        entry = by_problem[name]
        missing = [s for s in solvers if s not in entry]
        if missing:
            raise ValueError(f"problem {name!r} has no run for solvers {missing}")
        any_run = next(iter(entry.values()))
        n = int(any_run["n"])
        f0s = [float(r["f0"]) for r in entry.values() if math.isfinite(float(r["f0"]))]
        if not f0s:
            raise ValueError(f"problem {name!r}: no run recorded f(x0)")
        f0 = f0s[0]
        fl_cut = fl_budget_multiplier * n
        fL = min(_best_within(entry[s]["history"], fl_cut) for s in solvers)
        fL = min(fL, f0)
        cut = cutoff_multiplier * (n + 1) if cutoff_multiplier is not None else fl_cut
        row = []
        for s in solvers:
            hist = [(e, f) for e, f in entry[s]["history"] if e <= cut]
            t = evals_to_convergence(hist, f0, fL, tau) if hist else math.inf
            row.append(t)
        problems.append((name, n, f0, fL))
        rows.append(row)
    t = np.array(rows, dtype=float).reshape(len(rows), len(solvers))
    return ProfileMatrix(problems, list(solvers), t)


def _best_within(history, budget: int) -> float:
    best = math.inf
    for e, f in history:
        if e > budget:
            break
        best = f
    return best


def summarize(profile: dict, alphas: np.ndarray) -> dict:
    """rho(1), rho(2) and the normalized area under each profile curve."""
    alphas = np.asarray(alphas, dtype=float)
    x = np.log2(alphas) if alphas[0] > 0 else alphas
    width = x[-1] - x[0]
    out = {}
    for s, vals in profile.items():
        area = float(_trapezoid(vals, x) / width) if width > 0 else float(vals[-1])
        out[s] = {
            "at_1": _step_value(alphas, vals, 1.0),
            "at_2": _step_value(alphas, vals, 2.0),
            "area": area,
            "final": float(vals[-1]),
        }
    return out


_trapezoid = getattr(np, "trapezoid", None) or np.trapz


def _step_value(alphas, vals, a):
    idx = np.searchsorted(alphas, a, side="right") - 1
    return float(vals[idx]) if idx >= 0 else 0.0
