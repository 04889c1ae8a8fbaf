"""Additive and multiplicative noise models, deterministic and stochastic."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

KINDS = (
    "additive-deterministic",
    "additive-stochastic",
    "multiplicative-deterministic",
    "multiplicative-stochastic",
)


def psi(x: np.ndarray) -> float:
    """Deterministic high-frequency noise in [-1, 1] (Moré-Wild construction).

    A cubic Chebyshev polynomial T3(t) = t(4t^2 - 3) applied to
    0.9 sin(100 ||x||_1) cos(100 ||x||_inf) + 0.1 cos(||x||_2).
    """
    x = np.asarray(x, dtype=float)
    n1 = float(np.abs(x).sum())
    ninf = float(np.abs(x).max())
    n2 = math.sqrt(float(x @ x))
    t = 0.9 * math.sin(100.0 * n1) * math.cos(100.0 * ninf) + 0.1 * math.cos(n2)
    return t * (4.0 * t * t - 3.0)


@dataclass(frozen=True)
class NoiseConfig:
    kind: str
    eps_f: float = 1e-3

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown noise kind {self.kind!r}; expected one of {KINDS}")
        if not self.eps_f >= 0:
            raise ValueError("eps_f must be non-negative")

    @property
    def stochastic(self) -> bool:
        return self.kind.endswith("stochastic")

    def __call__(self, phi: float, x: np.ndarray, rng=None) -> float:
        return apply_noise(self, phi, x, rng)


def apply_noise(noise: NoiseConfig, phi: float, x: np.ndarray, rng=None) -> float:
    """Perturb the clean value ``phi`` at ``x``.

    Stochastic kinds draw a fresh U(-eps_f, eps_f) from ``rng`` on every call.
    """
    if noise.stochastic:
        if rng is None:
            raise ValueError("stochastic noise needs a random generator")
        e = float(rng.uniform(-noise.eps_f, noise.eps_f))
    else:
        e = noise.eps_f * psi(x)
    if noise.kind.startswith("additive"):
        return phi + e
    return phi * (1.0 + e)
