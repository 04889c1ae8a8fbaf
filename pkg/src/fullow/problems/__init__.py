"""Benchmark problems: the 53 Moré-Wild configurations and 12 scalable classics."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from . import mgh
from .noise import KINDS as NOISE_KINDS
from .noise import NoiseConfig, apply_noise, psi
from .scalable import SCALABLE

__all__ = [
    "MORE_WILD_TABLE", "NOISE_KINDS", "NoiseConfig", "ProblemSpec", "VARIANTS",
    "apply_noise", "eval_piecewise", "eval_smooth", "get_problem", "more_wild_problem",
    "psi", "scalable_problem", "suite",
]

VARIANTS = ("smooth", "piecewise") + NOISE_KINDS

# (problem number, n, m, start scaling exponent) for the 53 benchmark instances.
MORE_WILD_TABLE = (
    (1, 9, 45, 0), (1, 9, 45, 1), (2, 7, 35, 0), (2, 7, 35, 1),
    (3, 7, 35, 0), (3, 7, 35, 1), (4, 2, 2, 0), (4, 2, 2, 1),
    (5, 3, 3, 0), (5, 3, 3, 1), (6, 4, 4, 0), (6, 4, 4, 1),
    (7, 2, 2, 0), (7, 2, 2, 1), (8, 3, 15, 0), (8, 3, 15, 1),
    (9, 4, 11, 0), (10, 3, 16, 0), (11, 6, 31, 0), (11, 6, 31, 1),
    (11, 9, 31, 0), (11, 9, 31, 1), (11, 12, 31, 0), (11, 12, 31, 1),
    (12, 3, 10, 0), (13, 2, 10, 0), (14, 4, 20, 0), (14, 4, 20, 1),
    (15, 6, 6, 0), (15, 7, 7, 0), (15, 8, 8, 0), (15, 9, 9, 0),
    (15, 10, 10, 0), (15, 11, 11, 0), (16, 10, 10, 0), (17, 5, 33, 0),
    (18, 11, 65, 0), (18, 11, 65, 1), (19, 8, 8, 0), (19, 10, 12, 0),
    (19, 11, 14, 0), (19, 12, 16, 0), (20, 5, 5, 0), (20, 6, 6, 0),
    (20, 8, 8, 0), (21, 5, 5, 0), (21, 5, 5, 1), (21, 8, 8, 0),
    (21, 10, 10, 0), (21, 12, 12, 0), (21, 12, 12, 1), (22, 8, 8, 0),
    (22, 8, 8, 1),
)


@dataclass(frozen=True, eq=False)
class ProblemSpec:
    """One benchmark instance.

    Either ``residuals`` (called as ``residuals(x, m)``) or ``func`` is set.
    ``value`` returns the clean objective for ``variant``; noise, if any, is
    applied by the oracle through ``noise``.
    """

    name: str
    n: int
    x0: np.ndarray
    residuals: Optional[Callable] = None
    m: Optional[int] = None
    func: Optional[Callable] = None
    variant: str = "smooth"
    noise: Optional[NoiseConfig] = None
    known_L: Optional[float] = None

    def __post_init__(self):
        if (self.residuals is None) == (self.func is None):
            raise ValueError("exactly one of residuals/func must be given")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant == "piecewise" and self.residuals is None:
            raise ValueError("the piecewise variant needs a residual form")
        x0 = np.asarray(self.x0, dtype=float)
        if x0.shape != (self.n,):
            raise ValueError("x0 does not match the dimension")
        object.__setattr__(self, "x0", x0)

    @property
    def eps_f(self) -> float:
        return self.noise.eps_f if self.noise is not None else 0.0

    def value(self, x: np.ndarray) -> float:
        if self.variant == "piecewise":
            return eval_piecewise(self, x)
        return eval_smooth(self, x)

    def noisy_value(self, x: np.ndarray, rng=None) -> float:
        phi = self.value(x)
        if self.noise is None:
            return phi
        return apply_noise(self.noise, phi, x, rng)

    def with_variant(self, variant: str, eps_f: float = 1e-3) -> "ProblemSpec":
        if variant in NOISE_KINDS:
            return replace(self, variant=variant, noise=NoiseConfig(variant, eps_f))
        return replace(self, variant=variant, noise=None)


def _check_dim(spec: ProblemSpec, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (spec.n,):
        raise ValueError(f"{spec.name}: expected dimension {spec.n}, got shape {x.shape}")
    return x


def eval_smooth(spec: ProblemSpec, x) -> float:
    """Sum of squared residuals (or the direct function value)."""
    x = _check_dim(spec, x)
    with np.errstate(over="ignore", invalid="ignore"):
        if spec.func is not None:
            v = float(spec.func(x))
        else:
            r = spec.residuals(x, spec.m)
            v = float(r @ r)
    return v if math.isfinite(v) else math.inf


def eval_piecewise(spec: ProblemSpec, x) -> float:
    """Sum of absolute residuals."""
    x = _check_dim(spec, x)
    if spec.residuals is None:
        raise ValueError(f"{spec.name} has no residual form")
    with np.errstate(over="ignore", invalid="ignore"):
        v = float(np.abs(spec.residuals(x, spec.m)).sum())
    return v if math.isfinite(v) else math.inf


def _more_wild_names():
    names = []
    for nprob, n, m, s in MORE_WILD_TABLE:
        base = mgh.RESIDUALS[nprob][0]
        names.append(f"{base}_n{n}" + ("_s1" if s else ""))
    return names


_MW_NAMES = _more_wild_names()


def more_wild_problem(index: int, variant: str = "smooth", eps_f: float = 1e-3) -> ProblemSpec:
    """Instance ``index`` (0-based) of the 53-problem table."""
    nprob, n, m, s = MORE_WILD_TABLE[index]
    x0 = mgh.start_point(nprob, n) * 10.0 ** s
    spec = ProblemSpec(name=_MW_NAMES[index], n=n, x0=x0,
                       residuals=mgh.RESIDUALS[nprob][1], m=m)
    return spec.with_variant(variant, eps_f) if variant != "smooth" else spec


def scalable_problem(name: str, n: int, variant: str = "smooth",
                     eps_f: float = 1e-3) -> ProblemSpec:
    key = name.upper()
    if key not in SCALABLE:
        raise KeyError(f"unknown scalable problem {name!r}")
    func, start, multiple = SCALABLE[key]
    if n < 2 or (multiple and n % multiple):
        raise ValueError(f"{key} is not defined for n={n}")
    spec = ProblemSpec(name=f"{key}_n{n}", n=n, x0=start(n), func=func)
    return spec.with_variant(variant, eps_f) if variant != "smooth" else spec


def suite(kind: str, eps_f: float = 1e-3, n: int = 40) -> list:
    """Problem lists: ``smooth53``, ``piecewise53``, a noise kind, or ``scalable``."""
    if kind == "smooth53":
        return [more_wild_problem(i) for i in range(len(MORE_WILD_TABLE))]
    if kind == "piecewise53":
        return [more_wild_problem(i, "piecewise") for i in range(len(MORE_WILD_TABLE))]
    if kind in NOISE_KINDS:
        return [more_wild_problem(i, kind, eps_f) for i in range(len(MORE_WILD_TABLE))]
    if kind == "scalable":
        return [scalable_problem(name, n) for name in SCALABLE]
    raise ValueError(f"unknown suite {kind!r}")


def get_problem(name: str, variant: str = "smooth", eps_f: float = 1e-3) -> ProblemSpec:
    """Look a problem up by registry name.

    Moré-Wild instances are named ``<base>_n<n>`` (``_s1`` for the scaled
    start); a bare base name such as ``rosenbrock`` picks its first instance.
    Scalable problems are ``<NAME>_n<n>``, e.g. ``ARWHEAD_n40``.
    """
    if name in _MW_NAMES:
        return more_wild_problem(_MW_NAMES.index(name), variant, eps_f)
    for i, full in enumerate(_MW_NAMES):
        if full.rsplit("_n", 1)[0] == name and not full.endswith("_s1"):
            return more_wild_problem(i, variant, eps_f)
    base, _, dim = name.rpartition("_n")
    if base.upper() in SCALABLE and dim.isdigit():
        return scalable_problem(base, int(dim), variant, eps_f)
    raise KeyError(f"unknown problem {name!r}")
