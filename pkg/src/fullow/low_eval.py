"""Low-Eval iteration: probabilistic direct search with one random direction and its negative."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import IterationType, ObjectiveOracle, SolverConfig, forcing_rho


@dataclass
class LowEvalState:
    alpha: float
    nu: int = 0


def sample_sphere_direction(rng: np.random.Generator, n: int) -> np.ndarray:
    """Uniform draw on the unit sphere of R^n (normalized Gaussian)."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    while True:
        d = rng.standard_normal(n)
        nrm = np.linalg.norm(d)
        if nrm > 0:
            return d / nrm


@dataclass
class PollOutcome:
    success: bool
    x_next: np.ndarray
    f_next: float
    d_used: Optional[np.ndarray]
    evals: int


def poll(oracle: ObjectiveOracle, x: np.ndarray, f_x: float, alpha: float, d: np.ndarray,
         cfg: SolverConfig) -> PollOutcome:
    """Opportunistic poll of x + alpha*d, then x - alpha*d."""
    target = f_x - forcing_rho(alpha, cfg)
    evals = 0
    for direction in (d, -d):
        trial = x + alpha * direction
        f_trial = oracle(trial)
        evals += 1
        if f_trial <= target:
            return PollOutcome(True, trial, f_trial, direction, evals)
    return PollOutcome(False, x, f_x, None, evals)


@dataclass
class LowEvalResult:
    x_next: np.ndarray
    f_next: float
    state: LowEvalState
    next_type: IterationType
    success: bool
    evals: int


def low_eval_iteration(oracle: ObjectiveOracle, x: np.ndarray, f_x: float,
                       state: LowEvalState, nb_last: int, rng: np.random.Generator,
                       cfg: SolverConfig) -> LowEvalResult:
    d = sample_sphere_direction(rng, x.size)
    out = poll(oracle, x, f_x, state.alpha, d, cfg)
    if out.success:
        new = LowEvalState(state.alpha * cfg.lambda_expand, state.nu)
    else:
        new = LowEvalState(state.alpha * cfg.theta_contract, state.nu + 1)
    next_type = IterationType.LOW if new.nu < nb_last else IterationType.FULL
    return LowEvalResult(out.x_next, out.f_next, new, next_type, out.success, out.evals)
