"""Validation harness for the quintication pipeline.

Measures how well the solved quintic trajectory satisfies the original
equation through the residual operator L u = u'' - f_a(u), compares exact
and approximate periods, and provides an independent Runge-Kutta oracle
for trajectory-level checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np
from scipy.integrate import solve_ivp

from . import models, quintic
from .chebyshev import QuinticCoefficients, model_coefficients
from .errors import DomainError, QuintoscError


@dataclass(frozen=True, eq=False)
class ResidualReport:
    model: models.OscillatorModel
    coefficients: QuinticCoefficients
    grid: int
    sup_norm: float
    argmax_t: float
    samples: np.ndarray  # rows of (t, Lu)


@dataclass(frozen=True)
class PeriodComparison:
    exact: float
    approximate: float
    ratio: float


@dataclass(frozen=True, eq=False)
class OracleTrajectory:
    times: np.ndarray
    values: np.ndarray
    derivatives: np.ndarray
    tolerance: float


def residual_sup_norm(model: models.OscillatorModel, solution: quintic.ClosedFormSolution,
                      grid: int = 4001) -> ResidualReport:
    """Sup norm of L u = u'' - f_a(u) over the first quarter period.

    Because u solves the quintic equation exactly, its second derivative
    is -(c1*u + c3*u^3 + c5*u^5) pointwise and the residual reduces to an
    algebraic expression in u; no numerical differentiation is involved.
    """
    if grid < 2:
        raise DomainError(f"residual grid must have at least 2 points, got {grid}")
    c = solution.solved
    t = np.linspace(0.0, 0.25 * solution.period, grid)
    u = quintic.evaluate(solution, t)
    udd = -(c.c1 * u + c.c3 * u ** 3 + c.c5 * u ** 5)
    residual = udd - models.restoring_force(model, u)
    i = int(np.argmax(np.abs(residual)))
    samples = np.column_stack([t, residual])
    return ResidualReport(model, solution.coefficients, grid, float(abs(residual[i])), float(t[i]), samples)


def period_ratio(model: models.OscillatorModel) -> PeriodComparison:
    """Ratio of the exact model period to the quintication period."""
    exact = models.exact_period(model).value
    approx = quintic.solve(model_coefficients(model)).period
    return PeriodComparison(exact, approx, exact / approx)


ForceLike = Union[models.OscillatorModel, Callable]


def rk_oracle(rhs: ForceLike, t_end: float, tol: float = 1e-10, samples: int = 2001) -> OracleTrajectory:
    """Integrate u'' = f(u) from (1, 0) with an adaptive embedded RK pair.

    ``rhs`` is either a model or a plain callable u -> f(u).  The local
    tolerance must lie in [1e-13, 1e-6]; the returned trajectory holds
    ``samples`` uniformly spaced points on [0, t_end].
    """
    if not 1e-13 <= tol <= 1e-6:
        raise DomainError(f"oracle tolerance must lie in [1e-13, 1e-6], got {tol}")
    if t_end <= 0.0:
        raise DomainError(f"oracle horizon must be positive, got {t_end}")
    force = (lambda u: models.restoring_force(rhs, u)) if isinstance(rhs, models.OscillatorModel) else rhs
    times = np.linspace(0.0, t_end, samples)
    result = solve_ivp(
        lambda t, y: (y[1], force(y[0])),
        (0.0, t_end),
        (1.0, 0.0),
        method="DOP853",
        t_eval=times,
        rtol=tol,
        atol=1e-3 * tol,
    )
    if not result.success:
        raise QuintoscError(f"oracle integration failed: {result.message}")
    return OracleTrajectory(times, result.y[0], result.y[1], tol)


def compare_trajectories(closed: quintic.ClosedFormSolution, oracle: OracleTrajectory) -> float:
    """Max pointwise gap between the closed form and the oracle samples."""
    times = np.asarray(oracle.times, dtype=float)
    if times.size == 0 or np.any(np.diff(times) <= 0.0):
        raise DomainError("oracle trajectory must carry a strictly increasing time span")
    return float(np.max(np.abs(quintic.evaluate(closed, times) - oracle.values)))
