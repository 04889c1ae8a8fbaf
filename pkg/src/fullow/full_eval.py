"""Full-Eval iteration: forward-difference gradient, BFGS inverse update, truncated backtracking."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .core import IterationType, ObjectiveOracle, SolverConfig, forcing_rho


@dataclass
class FullEvalState:
    H: Optional[np.ndarray] = None
    x_prev: Optional[np.ndarray] = None
    g_prev: Optional[np.ndarray] = None
    nb_last: int = 0
    h: float = 0.0
    # outcome of the bootstrap iteration k=0, decides how H is initialized
    t1: Optional[IterationType] = None


def fd_gradient(oracle: ObjectiveOracle, x: np.ndarray, f_x: float, h: float) -> np.ndarray:
    """Forward differences (f(x + h e_i) - f(x)) / h; costs exactly n evaluations."""
    if h <= 0:
        raise ValueError("FD parameter must be positive")
    x = np.asarray(x, dtype=float)
    n = x.size
    g = np.empty(n)
    xi = x.copy()
    for i in range(n):
        xi[i] = x[i] + h
        g[i] = (oracle(xi) - f_x) / h
        xi[i] = x[i]
    return g


class CriticalityResult(NamedTuple):
    grad: np.ndarray
    h: float
    passes: int
    degenerate: bool


def criticality_step(oracle: ObjectiveOracle, x: np.ndarray, f_x: float, g0: np.ndarray,
                     h: float, beta: float, cfg: SolverConfig) -> CriticalityResult:
    """Shrink the FD parameter until h <= u_g' * beta * ||g||.

    Each pass sets h = omega**j * u_g' * beta * ||g0|| and recomputes the
    gradient. Stops after ``cfg.criticality_max_iter`` passes with
    ``degenerate=True``; that only happens near exact stationary points.
    """
    scale = cfg.u_g_prime * beta
    norm0 = float(np.linalg.norm(g0))
    g = g0
    j = 0
    while h > scale * float(np.linalg.norm(g)):
        if j >= cfg.criticality_max_iter:
            return CriticalityResult(g, h, j, True)
        j += 1
        h_new = cfg.omega ** j * scale * norm0
        if h_new <= 0:
            return CriticalityResult(g, h, j, True)
        h = h_new
        g = fd_gradient(oracle, x, f_x, h)
    return CriticalityResult(g, h, j, False)


def curvature_ok(s: np.ndarray, y: np.ndarray, eps_c: float) -> bool:
    """s'y >= eps_c ||s|| ||y||, with s'y > 0 also required so zero pairs are skipped."""
    sy = float(s @ y)
    return sy > 0 and sy >= eps_c * np.linalg.norm(s) * np.linalg.norm(y)


def bfgs_update(H_prev: np.ndarray, s: np.ndarray, y: np.ndarray, eps_c: float) -> np.ndarray:
    """BFGS inverse-Hessian update; returns ``H_prev`` itself when the curvature test fails."""
    if not curvature_ok(s, y, eps_c):
        return H_prev
    r = 1.0 / float(s @ y)
    Hy = H_prev @ y
    yHy = float(y @ Hy)
    H = (H_prev - r * (np.outer(s, Hy) + np.outer(Hy, s))
         + (r * r * yHy + r) * np.outer(s, s))
    return 0.5 * (H + H.T)


def h0_init(s0: np.ndarray, y0: np.ndarray, t1: IterationType) -> np.ndarray:
    """Initial inverse Hessian: scaled identity after a successful bootstrap, I otherwise."""
    n = s0.size
    if t1 is IterationType.LOW:
        return np.eye(n)
    yy = float(y0 @ y0)
    if yy == 0.0:
        return np.eye(n)
    scale = float(y0 @ s0) / yy
    if not (scale > 0 and math.isfinite(scale)):
        # a non-positive scale would destroy positive definiteness
        return np.eye(n)
    return scale * np.eye(n)


@dataclass
class LineSearchOutcome:
    success: bool
    x_next: np.ndarray
    f_next: float
    beta: float
    nb: int
    gtp: float
    trials: int


def line_search_full_eval(oracle: ObjectiveOracle, x: np.ndarray, f_x: float, g: np.ndarray,
                          p: np.ndarray, alpha: float, cfg: SolverConfig,
                          switch: bool = True) -> LineSearchOutcome:
    """Backtracking from beta_bar, abandoned as soon as beta < gamma * rho(alpha).

    With ``switch=False`` (full-only ablation) the switch test is replaced by a
    cap of ``cfg.max_backtracks`` halvings.
    """
    gtp = float(g @ p)
    threshold = cfg.gamma * forcing_rho(alpha, cfg)
    beta = cfg.beta_bar
    nb = 0
    trials = 0
    if switch and beta < threshold:
        return LineSearchOutcome(False, x, f_x, beta, 0, gtp, 0)
    while True:
        x_trial = x + beta * p
        f_trial = oracle(x_trial)
        trials += 1
        if f_trial <= f_x + cfg.c * beta * gtp:
            return LineSearchOutcome(True, x_trial, f_trial, beta, nb, gtp, trials)
        beta *= cfg.tau_backtrack
        nb += 1
        if switch:
            # beta == 0 only when rho(alpha) has underflowed; a null step is not a success
            if beta < threshold or beta == 0.0:
                return LineSearchOutcome(False, x, f_x, beta, nb, gtp, trials)
        elif nb >= cfg.max_backtracks:
            return LineSearchOutcome(False, x, f_x, beta, nb, gtp, trials)
