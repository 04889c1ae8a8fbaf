"""Orchestration of Full-Eval and Low-Eval iterations under a fixed evaluation budget."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .core import (
    DIRECTION_STREAM,
    NOISE_STREAM,
    BudgetExhausted,
    BudgetTooSmall,
    IterationLog,
    IterationRecord,
    IterationType,
    ObjectiveOracle,
    RunHistory,
    SolverConfig,
    forcing_rho,
    seeded_rng,
)
from .full_eval import (
    FullEvalState,
    bfgs_update,
    criticality_step,
    fd_gradient,
    h0_init,
    line_search_full_eval,
)
from .low_eval import LowEvalState, low_eval_iteration

logger = logging.getLogger(__name__)

MODES = ("fullow", "full-only", "low-only")
FULL, LOW = IterationType.FULL, IterationType.LOW


@dataclass
class SolverState:
    x: np.ndarray
    f_x: float
    t: IterationType
    full: FullEvalState
    low: LowEvalState
    log: IterationLog = field(default_factory=IterationLog)
    k: int = 0


@dataclass
class SolveResult:
    history: RunHistory
    log: IterationLog
    x_best: np.ndarray
    f_best: float
    x_final: np.ndarray
    f_final: float
    evals_used: int
    status: str


def make_oracle(problem, cfg: SolverConfig) -> ObjectiveOracle:
    noise = getattr(problem, "noise", None)
    rng = seeded_rng(cfg.seed, NOISE_STREAM) if noise is not None else None
    return ObjectiveOracle(problem.value, cfg.budget, noise=noise, rng=rng, n=problem.n)


def solve(problem, cfg: SolverConfig, gradient: Optional[Callable] = None) -> SolveResult:
    """Run the Full-Low Evaluation method on ``problem`` until the budget is spent.

    ``problem`` needs ``n``, ``x0``, ``value(x)`` and optionally ``noise``.
    ``gradient`` replaces the FD gradient with an exact one (no evaluations
    charged); intended for tests.
    """
    return _run(problem, cfg, "fullow", gradient)


def solve_ablation(problem, cfg: SolverConfig, mode: str,
                   gradient: Optional[Callable] = None) -> SolveResult:
    """``full-only`` is BFGS-FD without the switch test; ``low-only`` is pDS."""
    if mode not in ("full-only", "low-only"):
        raise ValueError(f"unknown ablation mode {mode!r}")
    return _run(problem, cfg, mode, gradient)


def _run(problem, cfg: SolverConfig, mode: str, gradient: Optional[Callable]) -> SolveResult:
    n = problem.n
    if n < 1:
        raise ValueError("problem dimension must be >= 1")
    if cfg.budget < n + 2:
        raise BudgetTooSmall(f"budget {cfg.budget} < n + 2 = {n + 2}")

    oracle = make_oracle(problem, cfg)
    dir_rng = seeded_rng(cfg.seed, DIRECTION_STREAM)
    x = np.array(problem.x0, dtype=float)
    f_x = oracle(x)
    state = SolverState(
        x=x, f_x=f_x, t=LOW if mode == "low-only" else FULL,
        full=FullEvalState(h=cfg.fd_step), low=LowEvalState(cfg.alpha0),
        log=IterationLog(initial_evals=1),
    )
    status = "budget"
    while True:
        start = oracle.counter
        kind = state.t
        try:
            if kind is FULL:
                status = _full_iteration(state, oracle, cfg, mode, gradient)
            else:
                status = _low_iteration(state, oracle, dir_rng, cfg, mode)
        except BudgetExhausted:
            state.log.append(IterationRecord(
                k=state.k, kind=kind, success=False, step=math.nan, count=0,
                evals=oracle.counter - start, alpha=state.low.alpha,
                f_before=state.f_x, f_after=state.f_x, aborted=True))
            status = "budget"
            break
        state.k += 1
        if status != "running":
            break

    hist = oracle.history
    return SolveResult(
        history=hist, log=state.log, x_best=hist.x_best, f_best=hist.final_best,
        x_final=state.x, f_final=state.f_x, evals_used=oracle.counter, status=status,
    )


def _full_iteration(state: SolverState, oracle: ObjectiveOracle, cfg: SolverConfig,
                    mode: str, gradient: Optional[Callable]) -> str:
    fe, x, f_x = state.full, state.x, state.f_x
    start = oracle.counter
    if gradient is not None:
        g = np.asarray(gradient(x), dtype=float)
    else:
        g = fd_gradient(oracle, x, f_x, cfg.fd_step)
        if cfg.criticality_enabled:
            res = criticality_step(oracle, x, f_x, g, cfg.fd_step, cfg.beta_bar, cfg)
            if res.degenerate:
                logger.debug("criticality step hit its cap at k=%d", state.k)
            g, fe.h = res.grad, res.h

    if cfg.grad_tol is not None and np.linalg.norm(g) < cfg.grad_tol:
        state.log.append(IterationRecord(
            k=state.k, kind=FULL, success=False, step=math.nan, count=0,
            evals=oracle.counter - start, alpha=state.low.alpha,
            f_before=f_x, f_after=f_x, aborted=True))
        return "grad_tol"

    if fe.g_prev is None:
        p = -g
    else:
        s = x - fe.x_prev
        y = g - fe.g_prev
        if fe.H is None:
            fe.H = h0_init(s, y, fe.t1)
        fe.H = bfgs_update(fe.H, s, y, cfg.eps_curvature)
        p = -(fe.H @ g)
        if not float(g @ p) < 0:
            p = -g

    alpha = state.low.alpha
    out = line_search_full_eval(oracle, x, f_x, g, p, alpha, cfg, switch=(mode == "fullow"))
    if fe.t1 is None:
        fe.t1 = FULL if out.success else LOW
    fe.x_prev, fe.g_prev, fe.nb_last = x, g, out.nb

    state.log.append(IterationRecord(
        k=state.k, kind=FULL, success=out.success, step=out.beta, count=out.nb,
        evals=oracle.counter - start, alpha=alpha, f_before=f_x,
        f_after=out.f_next, gtp=out.gtp, rho=forcing_rho(alpha, cfg)))

    if out.success:
        state.x, state.f_x = out.x_next, out.f_next
    elif mode == "fullow":
        state.t = LOW
        state.low.nu = 0
    return "running"


def _low_iteration(state: SolverState, oracle: ObjectiveOracle, rng: np.random.Generator,
                   cfg: SolverConfig, mode: str) -> str:
    alpha = state.low.alpha
    nb_last = state.full.nb_last
    res = low_eval_iteration(oracle, state.x, state.f_x, state.low, nb_last, rng, cfg)
    state.log.append(IterationRecord(
        k=state.k, kind=LOW, success=res.success, step=alpha, count=res.state.nu,
        evals=res.evals, alpha=alpha, f_before=state.f_x, f_after=res.f_next,
        rho=forcing_rho(alpha, cfg)))
    state.x, state.f_x, state.low = res.x_next, res.f_next, res.state
    if mode == "fullow":
        state.t = res.next_type
    if state.low.alpha > cfg.alpha_max:
        logger.warning("direct-search stepsize exceeded %g; stopping", cfg.alpha_max)
        return "alpha_overflow"
    if cfg.alpha_tol is not None and state.low.alpha < cfg.alpha_tol:
        return "alpha_tol"
    return "running"
