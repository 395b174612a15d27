"""Tests for the residual/period/oracle validation harness."""

import math

import numpy as np
import pytest

from quintosc import models, quintic, validation
from quintosc.chebyshev import model_coefficients
from quintosc.errors import DomainError

REL1 = models.OscillatorModel("relativistic", a=1.0)


def solved(model):
    return quintic.solve(model_coefficients(model))


class TestResidualSupNorm:
    def test_relativistic_reference_values(self):
        report = validation.residual_sup_norm(REL1, solved(REL1))
        assert report.sup_norm == pytest.approx(0.0013005, abs=1e-5)
        rel8 = models.OscillatorModel("relativistic", a=8.0)
        report8 = validation.residual_sup_norm(rel8, solved(rel8))
        assert report8.sup_norm == pytest.approx(0.0375439, abs=1e-5)

    def test_report_structure(self):
        solution = solved(REL1)
        report = validation.residual_sup_norm(REL1, solution, grid=501)
        assert report.grid == 501
        assert report.samples.shape == (501, 2)
        assert report.sup_norm >= 0.0
        assert 0.0 <= report.argmax_t <= solution.period / 4.0
        assert np.max(np.abs(report.samples[:, 1])) == report.sup_norm

    def test_grid_refinement_stability(self):
        for model in (REL1, models.OscillatorModel("duffing-relativistic", a=1.3, b=0.7)):
            solution = solved(model)
            coarse = validation.residual_sup_norm(model, solution, 4001).sup_norm
            fine = validation.residual_sup_norm(model, solution, 16001).sup_norm
            assert abs(coarse - fine) <= 1e-6

    def test_monotone_decrease_at_large_amplitude(self):
        sups = []
        for a in (8.0, 20.0, 30.0):
            model = models.OscillatorModel("relativistic", a=a)
            sups.append(validation.residual_sup_norm(model, solved(model)).sup_norm)
        assert sups[0] > sups[1] > sups[2]

    def test_analytic_udd_matches_finite_differences(self):
        # The report computes u'' through the quintic ODE identity; check
        # it against a 5-point stencil on the trajectory itself.
        model = models.OscillatorModel("cable-mass", a=1.0, b=1.0)
        solution = solved(model)
        c = solution.solved
        T = solution.period
        h = T * 1e-4
        t = np.linspace(0.0, T / 4.0, 1001)
        u = quintic.evaluate(solution, t)
        stencil = (-quintic.evaluate(solution, t + 2 * h) + 16 * quintic.evaluate(solution, t + h)
                   - 30 * u + 16 * quintic.evaluate(solution, t - h)
                   - quintic.evaluate(solution, t - 2 * h)) / (12.0 * h * h)
        analytic = -(c.c1 * u + c.c3 * u ** 3 + c.c5 * u ** 5)
        assert np.max(np.abs(stencil - analytic)) < 1e-6

    def test_tiny_grid_rejected(self):
        with pytest.raises(DomainError):
            validation.residual_sup_norm(REL1, solved(REL1), grid=1)


class TestPeriodRatio:
    def test_small_amplitude_tends_to_one(self):
        comparison = validation.period_ratio(models.OscillatorModel("relativistic", a=1e-4))
        assert comparison.ratio == pytest.approx(1.0, abs=1e-8)

    def test_ratio_fields(self):
        comparison = validation.period_ratio(models.OscillatorModel("relativistic", a=2.0))
        assert comparison.ratio == comparison.exact / comparison.approximate
        assert comparison.ratio > 0.0
        assert 0.999 <= comparison.ratio <= 1.0006

    def test_cable_mass_band(self):
        for a in (0.5, 3.0, 10.0, 30.0):
            for b in (0.25, 1.0):
                comparison = validation.period_ratio(models.OscillatorModel("cable-mass", a=a, b=b))
                assert 0.999 <= comparison.ratio <= 1.001


class TestRkOracle:
    def test_tolerance_domain(self):
        with pytest.raises(DomainError):
            validation.rk_oracle(lambda u: -u, 1.0, tol=1e-14)
        with pytest.raises(DomainError):
            validation.rk_oracle(lambda u: -u, 1.0, tol=1e-5)

    def test_harmonic_oscillator(self):
        oracle = validation.rk_oracle(lambda u: -u, 2.0 * math.pi, tol=1e-10)
        assert oracle.values[-1] == pytest.approx(1.0, abs=1e-9)
        assert np.all(np.diff(oracle.times) > 0.0)

    def test_quintic_returns_home(self):
        solution = quintic.solve((1.0, 2.0, 3.0))
        oracle = validation.rk_oracle(lambda u: -(u + 2.0 * u ** 3 + 3.0 * u ** 5),
                                      solution.period, tol=1e-10)
        assert oracle.values[-1] == pytest.approx(1.0, abs=1e-8)

    def test_model_rhs_and_energy_drift(self):
        t_end = models.exact_period(REL1).value
        oracle = validation.rk_oracle(REL1, t_end, tol=1e-10)
        assert oracle.values[-1] == pytest.approx(1.0, abs=1e-8)
        # V(u) = sqrt(1 + u^2) - 1 for the a = 1 relativistic force.
        energy = 0.5 * oracle.derivatives ** 2 + np.sqrt(1.0 + oracle.values ** 2) - 1.0
        assert np.max(np.abs(energy - energy[0])) <= 10.0 * oracle.tolerance * t_end


class TestCompareTrajectories:
    def test_identical_is_zero(self):
        solution = quintic.solve((1.0, 2.0, 3.0))
        times = np.linspace(0.0, solution.period, 257)
        fake = validation.OracleTrajectory(times, quintic.evaluate(solution, times),
                                           quintic.derivative(solution, times), 1e-10)
        assert validation.compare_trajectories(solution, fake) == 0.0

    def test_same_ode_agrees(self):
        solution = quintic.solve((1.0, 2.0, 3.0))
        oracle = validation.rk_oracle(lambda u: -(u + 2.0 * u ** 3 + 3.0 * u ** 5),
                                      solution.period, tol=1e-10)
        assert validation.compare_trajectories(solution, oracle) <= 1e-7

    def test_original_model_stays_close(self):
        # Against the original relativistic ODE the gap reflects the
        # projection error, on the scale of the residual tables.
        solution = solved(REL1)
        oracle = validation.rk_oracle(REL1, solution.period, tol=1e-10)
        assert validation.compare_trajectories(solution, oracle) <= 5e-3

    def test_bad_time_span_rejected(self):
        solution = quintic.solve((1.0, 2.0, 3.0))
        broken = validation.OracleTrajectory(np.array([0.0, 1.0, 0.5]), np.zeros(3), np.zeros(3), 1e-10)
        with pytest.raises(DomainError):
            validation.compare_trajectories(solution, broken)
