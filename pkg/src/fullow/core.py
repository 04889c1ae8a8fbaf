"""Shared data model: objective oracle, solver configuration, run records, RNG streams."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

# Stream identifiers for seeded_rng; noise draws must never perturb the polling directions.
DIRECTION_STREAM = 0
NOISE_STREAM = 1


class BudgetExhausted(Exception):
    """Raised by the oracle when no evaluations remain."""


class BudgetTooSmall(ValueError):
    """The budget cannot cover f(x0), one FD gradient and one trial point."""


class IterationType(str, enum.Enum):
    FULL = "full"
    LOW = "low"


@dataclass(frozen=True)
class SolverConfig:
    c: float = 1e-4
    beta_bar: float = 1.0
    tau_backtrack: float = 0.5
    gamma: float = 1.0
    gamma1: float = 1e-5
    gamma2: float = 1e-3
    lambda_expand: float = 2.0
    theta_contract: float = 0.5
    eps_curvature: float = 1e-10
    fd_step: float = math.sqrt(np.finfo(float).eps)
    alpha0: float = 1.0
    criticality_enabled: bool = False
    u_g_prime: float = 1.0
    omega: float = 0.5
    criticality_max_iter: int = 60
    budget: int = 1000
    seed: int = 0
    # Optional stops, off by default: the benchmark protocol is budget driven.
    alpha_tol: Optional[float] = None
    grad_tol: Optional[float] = None
    alpha_max: float = 1e30
    # Only used by the full-only ablation, which has no switch condition.
    max_backtracks: int = 50

    def __post_init__(self):
        if not 0 < self.c < 1:
            raise ValueError("c must lie in (0, 1)")
        if self.beta_bar <= 0:
            raise ValueError("beta_bar must be positive")
        if not 0 < self.tau_backtrack < 1:
            raise ValueError("tau_backtrack must lie in (0, 1)")
        if self.gamma <= 0 or self.gamma1 <= 0 or self.gamma2 <= 0:
            raise ValueError("gamma, gamma1, gamma2 must be positive")
        if self.lambda_expand < 1:
            raise ValueError("lambda_expand must be >= 1")
        if not 0 < self.theta_contract < 1:
            raise ValueError("theta_contract must lie in (0, 1)")
        if not 0 < self.eps_curvature < 1:
            raise ValueError("eps_curvature must lie in (0, 1)")
        if self.fd_step <= 0 or self.alpha0 <= 0 or self.u_g_prime <= 0:
            raise ValueError("fd_step, alpha0 and u_g_prime must be positive")
        if not 0 < self.omega < 1:
            raise ValueError("omega must lie in (0, 1)")
        if self.budget < 1:
            raise ValueError("budget must be a positive integer")


def forcing_rho(alpha: float, cfg: SolverConfig) -> float:
    """Forcing function min(gamma1, gamma2 * alpha**2)."""
    return min(cfg.gamma1, cfg.gamma2 * alpha * alpha)


def seeded_rng(seed: int, stream_id: int) -> np.random.Generator:
    """Independent deterministic generator for one (seed, stream) pair."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(stream_id),))
    return np.random.Generator(np.random.PCG64(ss))


@dataclass
class RunHistory:
    """Improving (eval_index, best_f) pairs; eval_index is 1-based."""

    evals: list = field(default_factory=list)
    best_f: list = field(default_factory=list)
    f0: float = math.nan
    x_best: Optional[np.ndarray] = None

    def record(self, eval_index: int, f: float, x: np.ndarray) -> None:
        if not self.evals:
            self.f0 = f
        if not self.best_f or f < self.best_f[-1]:
            self.evals.append(eval_index)
            self.best_f.append(f)
            self.x_best = np.array(x, dtype=float)

    @property
    def final_best(self) -> float:
        return self.best_f[-1] if self.best_f else math.inf

    def best_within(self, budget: int) -> float:
        """Best value observed using at most ``budget`` evaluations."""
        best = math.inf
        for e, f in zip(self.evals, self.best_f):
            if e > budget:
                break
            best = f
        return best

    def pairs(self):
        return list(zip(self.evals, self.best_f))


class ObjectiveOracle:
    """Counts evaluations of ``fn`` and refuses to exceed ``budget``.

    ``noise`` is an optional callable ``(phi, x, rng) -> value`` applied to the
    clean value; ``rng`` is the generator handed to it.
    """

    def __init__(self, fn: Callable[[np.ndarray], float], budget: int,
                 noise: Optional[Callable] = None,
                 rng: Optional[np.random.Generator] = None, n: Optional[int] = None):
        if budget < 1:
            raise ValueError("budget must be positive")
        self.fn = fn
        self.budget = int(budget)
        self.noise = noise
        self.rng = rng
        self.n = n
        self.counter = 0
        self.history = RunHistory()

    @property
    def remaining(self) -> int:
        return self.budget - self.counter

    def evaluate(self, x: np.ndarray) -> float:
        if self.counter >= self.budget:
            raise BudgetExhausted(f"budget of {self.budget} evaluations exhausted")
        x = np.asarray(x, dtype=float)
        if self.n is not None and x.shape != (self.n,):
            raise ValueError(f"expected a point of dimension {self.n}, got shape {x.shape}")
        if not np.all(np.isfinite(x)):
            raise ValueError("point has non-finite coordinates")
        self.counter += 1
        with np.errstate(all="ignore"):
            try:
                val = float(self.fn(x))
            except (OverflowError, ZeroDivisionError, ValueError):
                val = math.inf
            if self.noise is not None and math.isfinite(val):
                val = float(self.noise(val, x, self.rng))
        if not math.isfinite(val):
            # non-finite values are rejected by every acceptance test downstream
            val = math.inf
        self.history.record(self.counter, val, x)
        return val

    __call__ = evaluate


@dataclass
class IterationRecord:
    """One iteration of a run.

    For Full-Eval iterations ``step`` is the accepted beta (or the last tried
    one on failure) and ``count`` is nb; for Low-Eval iterations ``step`` is
    alpha_k and ``count`` is nu after the update.
    """

    k: int
    kind: IterationType
    success: bool
    step: float
    count: int
    evals: int
    alpha: float
    f_before: float
    f_after: float
    gtp: float = math.nan
    rho: float = math.nan
    aborted: bool = False


@dataclass
class IterationLog:
    records: list = field(default_factory=list)
    # evaluations spent outside any iteration (f(x0))
    initial_evals: int = 0

    def append(self, rec: IterationRecord) -> None:
        self.records.append(rec)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def total_evals(self) -> int:
        return self.initial_evals + sum(r.evals for r in self.records)

    def index_sets(self) -> dict:
        """Iteration indices split into successful/unsuccessful Full/Low sets."""
        out = {"SF": [], "UF": [], "SL": [], "UL": []}
        for r in self.records:
            key = ("S" if r.success else "U") + ("F" if r.kind is IterationType.FULL else "L")
            out[key].append(r.k)
        return out

    def count(self, kind: IterationType) -> int:
        return sum(1 for r in self.records if r.kind is kind)
