"""Residual vectors of the 22 Moré-Garbow-Hillstrom least-squares problems.

Each function maps (x, m) to the residual vector of length m. Numbering follows
the Moré-Wild benchmark (1 = linear full rank, ..., 22 = heart8).
"""

import math

import numpy as np

_V = np.array([4.0, 2.0, 1.0, 0.5, 0.25, 0.167, 0.125, 0.1, 0.0833, 0.0714, 0.0625])
_Y1 = np.array([0.14, 0.18, 0.22, 0.25, 0.29, 0.32, 0.35, 0.39, 0.37, 0.58, 0.73, 0.96,
                1.34, 2.10, 4.39])
_Y2 = np.array([0.1957, 0.1947, 0.1735, 0.16, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323,
                0.0235, 0.0246])
_Y3 = np.array([34780.0, 28610.0, 23650.0, 19630.0, 16370.0, 13720.0, 11540.0, 9744.0,
                8261.0, 7030.0, 6005.0, 5147.0, 4427.0, 3820.0, 3307.0, 2872.0])
_Y4 = np.array([0.844, 0.908, 0.932, 0.936, 0.925, 0.908, 0.881, 0.85, 0.818, 0.784, 0.751,
                0.718, 0.685, 0.658, 0.628, 0.603, 0.58, 0.558, 0.538, 0.522, 0.506, 0.49,
                0.478, 0.467, 0.457, 0.448, 0.438, 0.431, 0.424, 0.42, 0.414, 0.411, 0.406])
_Y5 = np.array([1.366, 1.191, 1.112, 1.013, 0.991, 0.885, 0.831, 0.847, 0.786, 0.725, 0.746,
                0.679, 0.608, 0.655, 0.616, 0.606, 0.602, 0.626, 0.651, 0.724, 0.649, 0.649,
                0.694, 0.644, 0.624, 0.661, 0.612, 0.558, 0.533, 0.495, 0.5, 0.423, 0.395,
                0.375, 0.372, 0.391, 0.396, 0.405, 0.428, 0.429, 0.523, 0.562, 0.607, 0.653,
                0.672, 0.708, 0.633, 0.668, 0.645, 0.632, 0.591, 0.559, 0.597, 0.625, 0.739,
                0.71, 0.729, 0.72, 0.636, 0.581, 0.428, 0.292, 0.162, 0.098, 0.054])


def linear_full_rank(x, m):
    n = x.size
    s = 2.0 * x.sum() / m + 1.0
    f = np.full(m, -s)
    f[:n] += x
    return f


def linear_rank_one(x, m):
    s = float(np.arange(1, x.size + 1) @ x)
    return np.arange(1, m + 1) * s - 1.0


def linear_rank_one_zero(x, m):
    n = x.size
    s = float(np.arange(2, n) @ x[1:n - 1])
    f = np.arange(m) * s - 1.0
    f[-1] = -1.0
    return f


def rosenbrock(x, m):
    return np.array([10.0 * (x[1] - x[0] ** 2), 1.0 - x[0]])


def helical_valley(x, m):
    if x[0] > 0:
        th = math.atan(x[1] / x[0]) / (2 * math.pi)
    elif x[0] < 0:
        th = math.atan(x[1] / x[0]) / (2 * math.pi) + 0.5
    else:
        th = 0.25
    r = math.hypot(x[0], x[1])
    return np.array([10.0 * (x[2] - 10.0 * th), 10.0 * (r - 1.0), x[2]])


def powell_singular(x, m):
    return np.array([
        x[0] + 10.0 * x[1],
        math.sqrt(5.0) * (x[2] - x[3]),
        (x[1] - 2.0 * x[2]) ** 2,
        math.sqrt(10.0) * (x[0] - x[3]) ** 2,
    ])


def freudenstein_roth(x, m):
    return np.array([
        -13.0 + x[0] + ((5.0 - x[1]) * x[1] - 2.0) * x[1],
        -29.0 + x[0] + ((1.0 + x[1]) * x[1] - 14.0) * x[1],
    ])


def bard(x, m):
    i = np.arange(1, 16, dtype=float)
    u, v = i, 16.0 - i
    w = np.minimum(u, v)
    return _Y1 - (x[0] + u / (x[1] * v + x[2] * w))


def kowalik_osborne(x, m):
    v = _V
    return _Y2 - x[0] * (v * v + x[1] * v) / (v * v + x[2] * v + x[3])


def meyer(x, m):
    t = 5.0 * np.arange(1, 17) + 45.0 + x[2]
    return x[0] * np.exp(x[1] / t) - _Y3


def watson(x, m):
    n = x.size
    t = np.arange(1, 30) / 29.0
    powers = t[:, None] ** np.arange(n)[None, :]
    s1 = powers[:, : n - 1] @ (np.arange(1, n) * x[1:])
    s2 = powers @ x
    f = np.empty(31)
    f[:29] = s1 - s2 * s2 - 1.0
    f[29] = x[0]
    f[30] = x[1] - x[0] ** 2 - 1.0
    return f


def box3d(x, m):
    i = np.arange(1, m + 1, dtype=float)
    t = i / 10.0
    return np.exp(-t * x[0]) - np.exp(-t * x[1]) + (np.exp(-i) - np.exp(-t)) * x[2]


def jennrich_sampson(x, m):
    i = np.arange(1, m + 1, dtype=float)
    return 2.0 + 2.0 * i - np.exp(i * x[0]) - np.exp(i * x[1])


def brown_dennis(x, m):
    t = np.arange(1, m + 1) / 5.0
    a = x[0] + t * x[1] - np.exp(t)
    b = x[2] + np.sin(t) * x[3] - np.cos(t)
    return a * a + b * b


def chebyquad(x, m):
    n = x.size
    f = np.zeros(m)
    for j in range(n):
        t1 = 1.0
        t2 = 2.0 * x[j] - 1.0
        t = 2.0 * t2
        for i in range(m):
            f[i] += t2
            th = t * t2 - t1
            t1, t2 = t2, th
    f /= n
    i = np.arange(1, m + 1)
    even = i % 2 == 0
    f[even] += 1.0 / (i[even] ** 2 - 1.0)
    return f


def brown_almost_linear(x, m):
    n = x.size
    f = x + (x.sum() - (n + 1.0))
    f[-1] = np.prod(x) - 1.0
    return f


def osborne1(x, m):
    t = 10.0 * np.arange(33)
    return _Y4 - (x[0] + x[1] * np.exp(-x[3] * t) + x[2] * np.exp(-x[4] * t))


def osborne2(x, m):
    t = np.arange(65) / 10.0
    return _Y5 - (x[0] * np.exp(-x[4] * t)
                  + x[1] * np.exp(-x[5] * (t - x[8]) ** 2)
                  + x[2] * np.exp(-x[6] * (t - x[9]) ** 2)
                  + x[3] * np.exp(-x[7] * (t - x[10]) ** 2))


def bdqrtic(x, m):
    n = x.size
    k = n - 4
    f = np.empty(2 * k)
    f[:k] = -4.0 * x[:k] + 3.0
    f[k:] = (x[:k] ** 2 + 2.0 * x[1:k + 1] ** 2 + 3.0 * x[2:k + 2] ** 2
             + 4.0 * x[3:k + 3] ** 2 + 5.0 * x[-1] ** 2)
    return f


def cube(x, m):
    f = np.empty(x.size)
    f[0] = x[0] - 1.0
    f[1:] = 10.0 * (x[1:] - x[:-1] ** 3)
    return f


def mancino(x, m):
    n = x.size
    i = np.arange(1, n + 1, dtype=float)
    v2 = np.sqrt(x[:, None] ** 2 + i[:, None] / i[None, :])
    lv = np.log(v2)
    ss = (v2 * (np.sin(lv) ** 5 + np.cos(lv) ** 5)).sum(axis=1)
    return 1400.0 * x + (i - 50.0) ** 3 + ss


def heart8(x, m):
    a, b, c, d, t, u, v, w = x
    return np.array([
        a + b + 0.69,
        c + d + 0.044,
        t * a + u * b - v * c - w * d + 1.57,
        v * a + w * b + t * c + u * d + 1.31,
        a * (t * t - v * v) - 2.0 * c * t * v + b * (u * u - w * w) - 2.0 * d * u * w + 2.65,
        c * (t * t - v * v) + 2.0 * a * t * v + d * (u * u - w * w) + 2.0 * b * u * w - 2.0,
        (a * t * (t * t - 3.0 * v * v) + c * v * (v * v - 3.0 * t * t)
         + b * u * (u * u - 3.0 * w * w) + d * w * (w * w - 3.0 * u * u) + 12.6),
        (c * t * (t * t - 3.0 * v * v) - a * v * (v * v - 3.0 * t * t)
         + d * u * (u * u - 3.0 * w * w) - b * w * (w * w - 3.0 * u * u) - 9.48),
    ])


RESIDUALS = {
    1: ("linear_full_rank", linear_full_rank),
    2: ("linear_rank_one", linear_rank_one),
    3: ("linear_rank_one_zero", linear_rank_one_zero),
    4: ("rosenbrock", rosenbrock),
    5: ("helical_valley", helical_valley),
    6: ("powell_singular", powell_singular),
    7: ("freudenstein_roth", freudenstein_roth),
    8: ("bard", bard),
    9: ("kowalik_osborne", kowalik_osborne),
    10: ("meyer", meyer),
    11: ("watson", watson),
    12: ("box3d", box3d),
    13: ("jennrich_sampson", jennrich_sampson),
    14: ("brown_dennis", brown_dennis),
    15: ("chebyquad", chebyquad),
    16: ("brown_almost_linear", brown_almost_linear),
    17: ("osborne1", osborne1),
    18: ("osborne2", osborne2),
    19: ("bdqrtic", bdqrtic),
    20: ("cube", cube),
    21: ("mancino", mancino),
    22: ("heart8", heart8),
}


def _mancino_start(n):
    x = np.empty(n)
    for i in range(1, n + 1):
        ss = 0.0
        for j in range(1, n + 1):
            r = math.sqrt(i / j)
            lr = math.log(r)
            ss += r * (math.sin(lr) ** 5 + math.cos(lr) ** 5)
        x[i - 1] = -8.710996e-4 * ((i - 50) ** 3 + ss)
    return x


def start_point(nprob: int, n: int) -> np.ndarray:
    """Unscaled standard starting point of problem ``nprob`` in dimension ``n``."""
    fixed = {
        4: [-1.2, 1.0],
        5: [-1.0, 0.0, 0.0],
        6: [3.0, -1.0, 0.0, 1.0],
        7: [0.5, -2.0],
        9: [0.25, 0.39, 0.415, 0.39],
        10: [0.02, 4000.0, 250.0],
        12: [0.0, 10.0, 20.0],
        13: [0.3, 0.4],
        14: [25.0, 5.0, -5.0, -1.0],
        17: [0.5, 1.5, -1.0, 0.01, 0.02],
        18: [1.3, 0.65, 0.65, 0.7, 0.6, 3.0, 5.0, 7.0, 2.0, 4.5, 5.5],
        22: [-0.3, -0.39, 0.3, -0.344, -1.2, 2.69, 1.59, -1.5],
    }
    if nprob in fixed:
        return np.array(fixed[nprob])
    if nprob in (1, 2, 3, 8, 19):
        return np.ones(n)
    if nprob in (11, 16, 20):
        return np.full(n, 0.5)
    if nprob == 15:
        return np.arange(1, n + 1) / (n + 1.0)
    if nprob == 21:
        return _mancino_start(n)
    raise ValueError(f"unknown problem number {nprob}")
