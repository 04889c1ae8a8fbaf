"""Twelve classic unconstrained problems of variable dimension (CUTEr analytic forms)."""

import math

import numpy as np


def arwhead(x):
    return float(np.sum((x[:-1] ** 2 + x[-1] ** 2) ** 2 - 4.0 * x[:-1] + 3.0))


def broydn3d_residuals(x):
    xp = np.concatenate(([0.0], x, [0.0]))
    return (3.0 - 2.0 * x) * x - xp[:-2] - 2.0 * xp[2:] + 1.0


def broydn3d(x):
    r = broydn3d_residuals(x)
    return float(r @ r)


def dqrtic(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum((x - i) ** 4))


def engval1(x):
    return float(np.sum((x[:-1] ** 2 + x[1:] ** 2) ** 2 - 4.0 * x[:-1] + 3.0))


def freuroth(x):
    a, b = x[:-1], x[1:]
    r1 = -13.0 + a + ((5.0 - b) * b - 2.0) * b
    r2 = -29.0 + a + ((1.0 + b) * b - 14.0) * b
    return float(r1 @ r1 + r2 @ r2)


def penalty2(x):
    n = x.size
    a = 1e-5
    i = np.arange(2, n + 1)
    y = np.exp(i / 10.0) + np.exp((i - 1) / 10.0)
    e = np.exp(x / 10.0)
    r_pair = e[1:] + e[:-1] - y
    r_tail = e[1:] - math.exp(-0.1)
    r_last = float(np.arange(n, 0, -1) @ (x * x)) - 1.0
    return float((x[0] - 0.2) ** 2 + a * (r_pair @ r_pair + r_tail @ r_tail) + r_last ** 2)


def nondquar(x):
    mid = x[:-2] + x[1:-1] + x[-1]
    return float((x[0] - x[1]) ** 2 + np.sum(mid ** 4) + (x[-2] + x[-1]) ** 2)


def rosenbr(x):
    odd, even = x[0::2], x[1::2]
    return float(np.sum(100.0 * (even - odd ** 2) ** 2 + (1.0 - odd) ** 2))


def sinquad(x):
    x1, xn = x[0], x[-1]
    mid = x[1:-1]
    return float((x1 - 1.0) ** 4 + np.sum((np.sin(mid - xn) - x1 ** 2 + mid ** 2) ** 2)
                 + (xn ** 2 - x1 ** 2) ** 2)


def tridia(x):
    i = np.arange(2, x.size + 1)
    return float((x[0] - 1.0) ** 2 + np.sum(i * (2.0 * x[1:] - x[:-1]) ** 2))


def woods(x):
    a, b, c, d = x[0::4], x[1::4], x[2::4], x[3::4]
    return float(np.sum(
        100.0 * (b - a ** 2) ** 2 + (1.0 - a) ** 2 + 90.0 * (d - c ** 2) ** 2 + (1.0 - c) ** 2
        + 10.1 * ((b - 1.0) ** 2 + (d - 1.0) ** 2) + 19.8 * (b - 1.0) * (d - 1.0)))


def arglina_residuals(x, m=None):
    n = x.size
    m = 2 * n if m is None else m
    s = 2.0 * x.sum() / m + 1.0
    r = np.full(m, -s)
    r[:n] += x
    return r


def arglina(x):
    r = arglina_residuals(x)
    return float(r @ r)


def _alternating(n):
    x = np.ones(n)
    x[1::2] = -1.0
    return x


def _freuroth_start(n):
    x = np.zeros(n)
    x[0], x[1] = 0.5, -2.0
    return x


def _woods_start(n):
    x = np.full(n, -1.0)
    x[0::2] = -3.0
    return x


def _rosenbr_start(n):
    x = np.ones(n)
    x[0::2] = -1.2
    return x


# name -> (function, start point builder, dimension constraint)
SCALABLE = {
    "ARGLINA": (arglina, np.ones, None),
    "ARWHEAD": (arwhead, np.ones, None),
    "BROYDN3D": (broydn3d, lambda n: -np.ones(n), None),
    "DQRTIC": (dqrtic, lambda n: np.full(n, 2.0), None),
    "ENGVAL1": (engval1, lambda n: np.full(n, 2.0), None),
    "FREUROTH": (freuroth, _freuroth_start, None),
    "PENALTY2": (penalty2, lambda n: np.full(n, 0.5), None),
    "NONDQUAR": (nondquar, _alternating, None),
    "ROSENBR": (rosenbr, _rosenbr_start, 2),
    "SINQUAD": (sinquad, lambda n: np.full(n, 0.1), None),
    "TRIDIA": (tridia, np.ones, None),
    "WOODS": (woods, _woods_start, 4),
}
