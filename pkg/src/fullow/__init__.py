"""Full-Low Evaluation: FD-BFGS line search alternating with probabilistic direct search."""

from .core import (
    BudgetExhausted,
    BudgetTooSmall,
    IterationLog,
    IterationType,
    ObjectiveOracle,
    RunHistory,
    SolverConfig,
    forcing_rho,
    seeded_rng,
)
from .driver import SolveResult, solve, solve_ablation
from .problems import ProblemSpec, get_problem, suite

__all__ = [
    "BudgetExhausted", "BudgetTooSmall", "IterationLog", "IterationType", "ObjectiveOracle",
    "ProblemSpec", "RunHistory", "SolveResult", "SolverConfig", "forcing_rho", "get_problem",
    "seeded_rng", "solve", "solve_ablation", "suite",
]
