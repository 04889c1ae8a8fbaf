import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fullow.core import seeded_rng
from fullow.problems import (
    MORE_WILD_TABLE,
    NOISE_KINDS,
    NoiseConfig,
    apply_noise,
    get_problem,
    psi,
    scalable_problem,
    suite,
)
from fullow.problems import mgh
from fullow.problems.scalable import SCALABLE


def psi_reference(x):
    """Independent route: T3(t) = cos(3 arccos t) on [-1, 1]."""
    x = np.asarray(x, dtype=float)
    t = (0.9 * math.sin(100 * sum(abs(v) for v in x)) * math.cos(100 * max(abs(v) for v in x))
         + 0.1 * math.cos(math.sqrt(sum(v * v for v in x))))
    return math.cos(3 * math.acos(t))


class TestRosenbrock:
    def test_smooth_values(self):
        p = get_problem("rosenbrock")
        assert p.value(np.array([1.0, 1.0])) == 0.0
        assert p.value(p.x0) == pytest.approx(24.2, rel=1e-14)

    def test_piecewise_values(self):
        p = get_problem("rosenbrock", "piecewise")
        assert p.value(np.array([1.0, 1.0])) == 0.0
        assert p.value(np.array([-1.2, 1.0])) == pytest.approx(6.6, rel=1e-14)

    def test_scaled_start(self):
        p = get_problem("rosenbrock_n2_s1")
        np.testing.assert_allclose(p.x0, [-12.0, 10.0])


class TestMgh:
    # f(x0) at the standard starts, recomputed by hand from the residual formulas
    @pytest.mark.parametrize("name, expected", [
        ("linear_full_rank", 72.0),
        ("helical_valley", 2500.0),
        ("powell_singular", 215.0),
        ("freudenstein_roth", 400.5),
    ])
    def test_start_values(self, name, expected):
        p = get_problem(name)
        assert p.value(p.x0) == pytest.approx(expected, rel=1e-12)

    def test_linear_rank_one_is_quadratic(self):
        p = get_problem("linear_rank_one")
        rng = np.random.default_rng(0)
        a, b = rng.standard_normal(7), rng.standard_normal(7)
        # a quadratic satisfies the parallelogram identity for second differences
        f = p.value
        lhs = f(a + b) + f(a - b) - 2 * f(a)
        rhs = f(b) + f(-b) - 2 * f(np.zeros(7))
        assert lhs == pytest.approx(rhs, rel=1e-9)

    def test_piecewise_is_sign_invariant(self):
        p = get_problem("bard", "piecewise")
        x = np.array([0.3, -1.0, 2.0])
        r = p.residuals(x, p.m)
        assert p.value(x) == pytest.approx(np.abs(-r).sum())

    def test_every_residual_has_m_entries(self):
        for nprob, n, m, s in MORE_WILD_TABLE:
            r = mgh.RESIDUALS[nprob][1](mgh.start_point(nprob, n) * 10.0 ** s, m)
            assert r.shape == (m,)
            assert np.all(np.isfinite(r))


class TestSuites:
    def test_smooth53(self):
        probs = suite("smooth53")
        assert len(probs) == 53
        assert len({p.name for p in probs}) == 53
        dims = [p.n for p in probs]
        assert min(dims) == 2 and max(dims) == 12
        hist = Counter(dims)
        assert hist == {2: 5, 3: 6, 4: 5, 5: 4, 6: 4, 7: 5, 8: 6, 9: 5, 10: 4, 11: 4, 12: 5}

    def test_scalable(self):
        probs = suite("scalable", n=40)
        assert len(probs) == 12
        assert all(p.n == 40 for p in probs)

    @pytest.mark.parametrize("kind", NOISE_KINDS)
    def test_noisy(self, kind):
        probs = suite(kind, eps_f=1e-3)
        assert len(probs) == 53
        assert all(p.noise is not None and p.eps_f == 1e-3 for p in probs)
        assert [p.name for p in probs] == [p.name for p in suite("smooth53")]

    def test_unknown(self):
        with pytest.raises(ValueError):
            suite("nope")
        with pytest.raises(KeyError):
            get_problem("nope")


class TestNoise:
    @pytest.mark.parametrize("kind", NOISE_KINDS)
    def test_zero_level_is_identity(self, kind):
        cfg = NoiseConfig(kind, 0.0)
        x = np.array([0.3, 0.7])
        assert apply_noise(cfg, 2.5, x, seeded_rng(0, 1)) == 2.5

    def test_additive_deterministic_bound(self):
        cfg = NoiseConfig("additive-deterministic", 1e-3)
        rng = np.random.default_rng(1)
        for _ in range(10_000):
            x = rng.uniform(-5, 5, size=4)
            assert abs(apply_noise(cfg, 1.0, x) - 1.0) <= 1e-3

    @pytest.mark.parametrize("kind", ["multiplicative-deterministic", "multiplicative-stochastic"])
    def test_multiplicative_vanishes_at_zero(self, kind):
        assert apply_noise(NoiseConfig(kind), 0.0, np.ones(3), seeded_rng(0, 1)) == 0.0

    def test_stochastic_needs_rng(self):
        with pytest.raises(ValueError):
            apply_noise(NoiseConfig("additive-stochastic"), 1.0, np.ones(2))

    def test_stochastic_range(self):
        cfg = NoiseConfig("additive-stochastic", 1e-3)
        rng = seeded_rng(0, 1)
        vals = np.array([apply_noise(cfg, 0.0, np.zeros(2), rng) for _ in range(2000)])
        assert np.all(np.abs(vals) <= 1e-3)
        assert vals.std() == pytest.approx(1e-3 / math.sqrt(3), rel=0.1)

    @pytest.mark.parametrize("x", [
        [0.0], [1.0, 1.0], [-1.2, 1.0], [0.5, -0.25, 0.125], [3.0, 0.01, -2.0, 7.5],
    ])
    def test_psi_golden(self, x):
        assert psi(np.array(x)) == pytest.approx(psi_reference(x), abs=1e-12)

    def test_psi_at_origin(self):
        # t = 0.1 at the origin, T3(0.1) = 0.1 * (0.04 - 3)
        assert psi(np.zeros(3)) == pytest.approx(0.1 * (4 * 0.01 - 3), abs=1e-15)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.floats(min_value=-100, max_value=100), min_size=1, max_size=12))
    def test_psi_range(self, x):
        assert -1.0 <= psi(np.array(x)) <= 1.0


class TestScalable:
    def test_tridia_minimizer(self):
        n = 40
        x = 2.0 ** -np.arange(n)
        assert scalable_problem("TRIDIA", n).value(x) == 0.0

    def test_rosenbr_ones(self):
        assert scalable_problem("ROSENBR", 40).value(np.ones(40)) == 0.0

    def test_arwhead_start(self):
        n = 40
        x = np.ones(n)
        ref = sum((x[i] ** 2 + x[n - 1] ** 2) ** 2 - 4 * x[i] + 3 for i in range(n - 1))
        assert ref == 117.0
        assert scalable_problem("ARWHEAD", n).value(x) == ref

    @pytest.mark.parametrize("name", ["DQRTIC", "WOODS", "ARWHEAD"])
    def test_known_minimizers(self, name):
        n = 40
        x = {"DQRTIC": np.arange(1.0, n + 1), "WOODS": np.ones(n),
             "ARWHEAD": np.r_[np.ones(n - 1), 0.0]}[name]
        assert scalable_problem(name, n).value(x) == pytest.approx(0.0, abs=1e-12)

    def test_dimension_constraints(self):
        with pytest.raises(ValueError):
            scalable_problem("WOODS", 6)
        with pytest.raises(ValueError):
            scalable_problem("ROSENBR", 5)

    def test_all_finite_at_start(self):
        for name in SCALABLE:
            p = scalable_problem(name, 40)
            assert math.isfinite(p.value(p.x0))
