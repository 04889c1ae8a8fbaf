import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fullow.core import IterationType, ObjectiveOracle, SolverConfig, forcing_rho, seeded_rng
from fullow.low_eval import LowEvalState, low_eval_iteration, poll, sample_sphere_direction


def quad_oracle(n, budget=10_000):
    return ObjectiveOracle(lambda x: float(x @ x), budget=budget, n=n)


class TestSphereDirection:
    def test_one_dimension_is_sign(self):
        rng = seeded_rng(3, 0)
        draws = {float(sample_sphere_direction(rng, 1)[0]) for _ in range(50)}
        assert draws == {-1.0, 1.0}

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=50), st.integers(min_value=0, max_value=2**31))
    def test_unit_norm(self, n, seed):
        d = sample_sphere_direction(seeded_rng(seed, 0), n)
        assert d.shape == (n,)
        assert abs(np.linalg.norm(d) - 1.0) < 1e-12

    def test_mean_is_near_zero(self):
        rng = seeded_rng(0, 0)
        draws = np.array([sample_sphere_direction(rng, 3) for _ in range(10_000)])
        assert np.all(np.abs(draws.mean(axis=0)) < 0.05)
        # E[d_i^2] = 1/n for the uniform distribution on the sphere
        np.testing.assert_allclose((draws ** 2).mean(axis=0), 1 / 3, atol=0.02)

    def test_rejects_zero_dimension(self):
        with pytest.raises(ValueError):
            sample_sphere_direction(seeded_rng(0, 0), 0)


class TestPoll:
    cfg = SolverConfig()

    def test_first_direction_succeeds(self):
        o = quad_oracle(1)
        out = poll(o, np.array([1.0]), 1.0, 0.5, np.array([-1.0]), self.cfg)
        assert out.success and out.evals == 1 and o.counter == 1
        np.testing.assert_array_equal(out.x_next, [0.5])
        assert out.f_next == 0.25

    def test_negative_direction_succeeds(self):
        o = quad_oracle(1)
        out = poll(o, np.array([1.0]), 1.0, 0.5, np.array([1.0]), self.cfg)
        assert out.success and out.evals == 2
        np.testing.assert_array_equal(out.d_used, [-1.0])
        np.testing.assert_array_equal(out.x_next, [0.5])

    def test_both_fail(self):
        o = quad_oracle(1)
        out = poll(o, np.array([0.0]), 0.0, 0.5, np.array([1.0]), self.cfg)
        assert not out.success and out.evals == 2 and out.d_used is None
        np.testing.assert_array_equal(out.x_next, [0.0])

    def test_decrease_smaller_than_rho_rejected(self):
        alpha = 1.0
        rho = forcing_rho(alpha, self.cfg)
        o = ObjectiveOracle(lambda x: 1.0 - 0.5 * rho * x[0], budget=10, n=1)
        out = poll(o, np.array([0.0]), 1.0, alpha, np.array([1.0]), self.cfg)
        assert not out.success
        o = ObjectiveOracle(lambda x: 1.0 - rho * x[0], budget=10, n=1)
        out = poll(o, np.array([0.0]), 1.0, alpha, np.array([1.0]), self.cfg)
        assert out.success and out.evals == 1


class TestLowEvalIteration:
    cfg = SolverConfig()

    def run(self, x, f_x, state, nb_last):
        n = x.size
        return low_eval_iteration(quad_oracle(n), x, f_x, state, nb_last, seeded_rng(0, 0), self.cfg)

    def test_failure_contracts_and_counts(self):
        res = self.run(np.zeros(2), 0.0, LowEvalState(1.0, 0), nb_last=3)
        assert not res.success and res.evals == 2
        assert res.state.alpha == 0.5 and res.state.nu == 1
        assert res.next_type is IterationType.LOW

    def test_failure_reaching_nb_switches_back(self):
        res = self.run(np.zeros(2), 0.0, LowEvalState(1.0, 2), nb_last=3)
        assert res.state.nu == 3
        assert res.next_type is IterationType.FULL

    def test_success_expands_keeps_nu(self):
        x = np.array([10.0, 0.0])
        res = self.run(x, 100.0, LowEvalState(1.0, 1), nb_last=3)
        assert res.success
        assert res.state.alpha == 2.0 and res.state.nu == 1
        assert res.next_type is IterationType.LOW
        assert res.f_next <= 100.0 - forcing_rho(1.0, self.cfg)

    def test_nb_last_zero_returns_to_full(self):
        res = self.run(np.zeros(2), 0.0, LowEvalState(1.0, 0), nb_last=0)
        assert res.next_type is IterationType.FULL


@pytest.mark.parametrize("n", [2, 5, 10])
def test_pure_direct_search_converges_on_sphere(n):
    cfg = SolverConfig()
    budget = 200 * (n + 1)
    hits = 0
    for seed in range(20):
        rng = seeded_rng(seed, 0)
        o = quad_oracle(n, budget=budget)
        x = np.ones(n) / math.sqrt(n)
        f = o(x)
        state = LowEvalState(cfg.alpha0)
        while o.remaining >= 2:
            res = low_eval_iteration(o, x, f, state, math.inf, rng, cfg)
            x, f, state = res.x_next, res.f_next, res.state
        hits += f < 1e-2
    assert hits >= 18
