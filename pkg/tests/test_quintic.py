"""Tests for the closed-form quintic oscillator solutions."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from quintosc import quintic as q
from quintosc.chebyshev import QuinticCoefficients
from quintosc.errors import ConstructionError, UnsupportedCaseError

# Frozen from an independent 30-digit quadrature of the time integral.
T_123 = 3.0725998166282099
T_CASE2 = 5.8396105268253568
CASE2 = (-1.0 / 3.0, 4.0 / 3.0, 1.0)  # h2 roots exactly (-2, -1)


def case1_triple(p: float, s: float, c5: float) -> tuple:
    """Triple whose h2 has complex roots p +- i*s (Case I for c5 > 0, s != 0)."""
    c3 = -(2.0 * c5 / 3.0) * (2.0 * p + 1.0)
    c1 = (c5 / 3.0) * (p * p + s * s + 2.0 * p)
    return (c1, c3, c5)


def case2_triple(s1: float, s2: float, c5: float) -> tuple:
    """Triple whose h2 has real roots s1 < s2 < 0 (Case II for c5 > 0)."""
    c3 = -(2.0 * c5 / 3.0) * (s1 + s2 + 1.0)
    c1 = (c5 / 3.0) * (s1 * s2 + s1 + s2)
    return (c1, c3, c5)


class TestDiscriminantAndClassify:
    def test_discriminant_examples(self):
        assert q.discriminant((1.0, 2.0, 3.0)) == -96.0
        assert q.discriminant((1.0, 0.0, 0.0)) == 0.0
        assert q.discriminant((0.0, 1.0, 0.0)) == 3.0

    def test_classify_examples(self):
        assert q.classify((1.0, 2.0, 3.0)) == q.CASE_I
        assert q.classify(CASE2) == q.CASE_II
        assert q.classify((1.0, 1.0, -1.0)) == q.UNSUPPORTED
        assert q.classify((0.0, 2.0, 1.0)) == q.DEGENERATE

    def test_classify_rejects_negative_h2_at_zero(self):
        # delta > 0 but 6c1 + 3c3 + 2c5 < 0: no bounded oscillation.
        assert q.classify((-1.0, 0.0, 1.0)) == q.UNSUPPORTED

    def test_classification_is_total(self):
        for c in [(0.0, 0.0, 0.0), (1e300, -1e300, 1e-300), (-5.0, 2.0, 0.1)]:
            assert q.classify(c) in (q.CASE_I, q.CASE_II, q.DEGENERATE, q.UNSUPPORTED)


class TestSolveCase1:
    def test_reference_parameters(self):
        params = q.solve_case1((1.0, 2.0, 3.0))
        assert params.P == 6.0 and params.Q == 18.0 and params.k_tilde == 16.0
        assert params.B == pytest.approx(0.5, rel=1e-15)
        assert params.A == pytest.approx(6.0 ** 0.25 / (2.0 * 108.0 ** 0.25), rel=1e-15)
        assert params.m == pytest.approx(0.5 - math.sqrt(2.0) / 3.0, rel=1e-14)
        assert params.period == pytest.approx(T_123, rel=1e-13)

    def test_rejects_other_cases(self):
        with pytest.raises(ConstructionError):
            q.solve_case1(CASE2)
        with pytest.raises(ConstructionError):
            q.solve_case1((1.0, 1.0, -1.0))

    def test_parameter_ranges_random(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            c = case1_triple(rng.uniform(-3, 3), rng.uniform(0.1, 3), rng.uniform(0.1, 5))
            params = q.solve_case1(c)
            assert 0.0 <= params.m < 1.0
            assert params.P > 0.0 and params.Q > 0.0
            assert params.period > 0.0


class TestSolveCase2:
    def test_reference_roots(self):
        params = q.solve_case2(CASE2)
        assert params.s1 == pytest.approx(-2.0, rel=1e-14)
        assert params.s2 == pytest.approx(-1.0, rel=1e-14)
        assert params.m == pytest.approx(0.25, rel=1e-14)
        assert params.rate == pytest.approx(math.sqrt(4.0 / 3.0), rel=1e-14)
        assert params.period == pytest.approx(T_CASE2, rel=1e-13)

    def test_rejects_other_cases(self):
        with pytest.raises(ConstructionError):
            q.solve_case2((1.0, 2.0, 3.0))

    @given(st.floats(-6.0, -0.4), st.floats(0.05, 0.95), st.floats(0.1, 5.0))
    def test_modulus_in_unit_interval(self, s1, frac, c5):
        s2 = s1 * frac  # strictly between s1 and 0
        params = q.solve_case2(case2_triple(s1, s2, c5))
        assert 0.0 < params.m < 1.0
        assert params.s1 == pytest.approx(s1, rel=1e-9)
        assert params.s2 == pytest.approx(s2, rel=1e-9)


class TestPeriod:
    def test_closed_form_vs_quadrature(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            c1 = case1_triple(rng.uniform(-3, 3), rng.uniform(0.1, 3), rng.uniform(0.1, 5))
            c2 = case2_triple(rng.uniform(-6, -0.4), rng.uniform(-0.35, -0.05), rng.uniform(0.1, 5))
            for c in (c1, c2):
                sol = q.solve(c)
                assert sol.period == pytest.approx(q.period_by_quadrature(c), rel=1e-9)

    def test_time_rescaling(self):
        lam = 2.0
        base = q.solve((1.0, 2.0, 3.0)).period
        scaled = q.solve((lam ** 2 * 1.0, lam ** 2 * 2.0, lam ** 2 * 3.0)).period
        assert scaled == pytest.approx(base / lam, rel=1e-12)

    def test_pure_cubic_limit_continuity(self):
        # (0, 1, eps) approaches the pure-cubic oscillator as eps -> 0+.
        reference = q.period_by_quadrature((0.0, 1.0, 0.0))
        coarse = q.solve((0.0, 1.0, 1e-3)).period
        fine = q.solve((0.0, 1.0, 1e-6)).period
        assert abs(fine - reference) < abs(coarse - reference)
        assert fine == pytest.approx(reference, abs=1e-5)


class TestEvaluate:
    @pytest.mark.parametrize("c", [(1.0, 2.0, 3.0), CASE2])
    def test_anchor_points(self, c):
        sol = q.solve(c)
        T = sol.period
        assert q.evaluate(sol, 0.0) == pytest.approx(1.0, abs=1e-12)
        assert abs(q.evaluate(sol, T / 4.0)) < 1e-9
        assert q.evaluate(sol, T / 2.0) == pytest.approx(-1.0, abs=1e-12)
        assert q.evaluate(sol, T) == pytest.approx(1.0, abs=1e-9)

    def test_frozen_trajectory_points(self):
        sol = q.solve((1.0, 2.0, 3.0))
        assert q.evaluate(sol, 0.3 * sol.period) == pytest.approx(-0.2650030366509913, abs=1e-13)
        assert q.evaluate(sol, 0.11 * sol.period) == pytest.approx(0.7123823650784179, abs=1e-13)
        sol2 = q.solve(CASE2)
        assert q.evaluate(sol2, 0.2 * sol2.period) == pytest.approx(0.23945268830004717, abs=1e-13)

    @pytest.mark.parametrize("c", [(1.0, 2.0, 3.0), CASE2])
    def test_symmetries(self, c):
        sol = q.solve(c)
        T = sol.period
        t = np.linspace(0.0, T / 2.0, 301)
        u = q.evaluate(sol, t)
        np.testing.assert_allclose(q.evaluate(sol, T - t), u, rtol=0.0, atol=1e-10)
        # u is even about T/2 (time reversal) and antiperiodic by T/2.
        np.testing.assert_allclose(q.evaluate(sol, T / 2.0 + t), q.evaluate(sol, T / 2.0 - t),
                                   rtol=0.0, atol=1e-10)
        np.testing.assert_allclose(q.evaluate(sol, t + T / 2.0), -u, rtol=0.0, atol=1e-10)

    @pytest.mark.parametrize("c", [(1.0, 2.0, 3.0), CASE2])
    def test_periodic_extension_and_range(self, c):
        sol = q.solve(c)
        t = np.linspace(-2.0 * sol.period, 3.0 * sol.period, 1501)
        u = q.evaluate(sol, t)
        assert np.max(np.abs(u)) <= 1.0 + 1e-12
        np.testing.assert_allclose(q.evaluate(sol, t + 7.0 * sol.period), u, rtol=0.0, atol=1e-9)

    def test_initial_velocity_vanishes(self):
        sol = q.solve((1.0, 2.0, 3.0))
        h = 1e-6 * sol.period
        fd = (q.evaluate(sol, h) - q.evaluate(sol, -h)) / (2.0 * h)
        assert abs(fd) < 1e-7

    @pytest.mark.parametrize("c", [
        (1.0, 2.0, 3.0),
        case1_triple(-1.2, 0.8, 0.9),
        case1_triple(2.0, 2.5, 0.4),
        CASE2,
        case2_triple(-4.0, -0.3, 1.7),
        case2_triple(-1.5, -1.0, 0.25),
    ])
    def test_ode_residual_by_finite_differences(self, c):
        # 5-point central second derivative of the closed form must satisfy
        # the quintic ODE; this guards the Jacobi-function plumbing.
        sol = q.solve(c)
        T = sol.period
        h = T * 1e-4
        t = np.linspace(0.0, T, 1001)
        u = q.evaluate(sol, t)
        udd = (-q.evaluate(sol, t + 2 * h) + 16 * q.evaluate(sol, t + h) - 30 * u
               + 16 * q.evaluate(sol, t - h) - q.evaluate(sol, t - 2 * h)) / (12.0 * h * h)
        rhs = -(c[0] * u + c[1] * u ** 3 + c[2] * u ** 5)
        assert np.max(np.abs(udd - rhs)) < 1e-6

    @pytest.mark.parametrize("c", [(1.0, 2.0, 3.0), CASE2])
    def test_derivative_matches_finite_differences(self, c):
        sol = q.solve(c)
        T = sol.period
        h = T * 1e-6
        t = np.linspace(0.05 * T, 0.95 * T, 401)
        fd = (q.evaluate(sol, t + h) - q.evaluate(sol, t - h)) / (2.0 * h)
        np.testing.assert_allclose(q.derivative(sol, t), fd, rtol=0.0, atol=1e-6)


class TestSolveDispatch:
    def test_case_tags(self):
        assert q.solve((1.0, 2.0, 3.0)).case == q.CASE_I
        assert q.solve(CASE2).case == q.CASE_II

    def test_unsupported(self):
        with pytest.raises(UnsupportedCaseError):
            q.solve((1.0, 1.0, -1.0))

    def test_accepts_dataclass_input(self):
        sol = q.solve(QuinticCoefficients(1.0, 2.0, 3.0, "manual"))
        assert sol.period == pytest.approx(T_123, rel=1e-13)

    def test_degenerate_nudge(self):
        # delta(0, 2, 1) = 0 exactly; the solution must come from a tiny
        # c5 perturbation and stay close to the unperturbed dynamics.
        sol = q.solve((0.0, 2.0, 1.0))
        assert sol.nudge != 0.0
        assert abs(sol.nudge) == pytest.approx(q.NUDGE)
        assert sol.coefficients.c5 == 1.0
        assert sol.solved.c5 != 1.0
        assert sol.period == pytest.approx(math.pi * math.sqrt(2.0), rel=1e-7)

    def test_degenerate_trajectory_against_oracle(self):
        from quintosc.validation import compare_trajectories, rk_oracle

        sol = q.solve((0.0, 2.0, 1.0))
        oracle = rk_oracle(lambda u: -(2.0 * u ** 3 + u ** 5), sol.period, tol=1e-10)
        assert compare_trajectories(sol, oracle) < 1e-5
