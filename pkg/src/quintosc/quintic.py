"""Exact solution of the quintic oscillator.

The initial value problem is

    u'' = -(c1*u + c3*u^3 + c5*u^5),  u(0) = 1,  u'(0) = 0.

Energy conservation gives u'^2 = (1 - u^2) * h2(u^2) / 6 with the
quadratic h2(s) = (6c1 + 3c3 + 2c5) + (3c3 + 2c5)*s + 2*c5*s^2, and the
solution is periodic with |u| <= 1 whenever c5 > 0 and either

    (I)  h2 has no real root in a neighbourhood of [0, 1]
         (discriminant delta = 3c3^2 - 4c5(4c1 + c3 + c5) < 0), or
    (II) delta > 0 with h2(0) = 6c1 + 3c3 + 2c5 > 0, which puts both
         roots of h2 on the negative axis.

Each case inverts the resulting elliptic time integral into Jacobi
functions; see DLMF chapter 22 for the function conventions (we pass the
parameter m = k^2 throughout).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.integrate import quad

from .chebyshev import QuinticCoefficients
from .elliptic import complete_K, jacobi_am, jacobi_sn_cn_dn
from .errors import ConstructionError, QuintoscError, UnsupportedCaseError

CASE_I = "I"
CASE_II = "II"
DEGENERATE = "degenerate"
UNSUPPORTED = "unsupported"

# Relative nudge applied to c5 when the discriminant vanishes: the
# degenerate solution is the limit of Case I solutions, so a tiny
# perturbation recovers it to comparable accuracy.
NUDGE = 1e-8

# When |c5| falls below this fraction of the largest coefficient the
# quintic term (and the sign of the discriminant with it) is rounding
# noise; solve() then lifts c5 to exactly this fraction.
C5_FLOOR = 1e-10

Coefficients = Union[QuinticCoefficients, tuple]


def _coerce(c: Coefficients) -> QuinticCoefficients:
    if isinstance(c, QuinticCoefficients):
        return c
    return QuinticCoefficients(*map(float, c))


@dataclass(frozen=True)
class CaseIParameters:
    A: float
    B: float
    m: float
    P: float
    Q: float
    k_tilde: float
    period: float


@dataclass(frozen=True)
class CaseIIParameters:
    s1: float
    s2: float
    m: float
    rate: float
    period: float


@dataclass(frozen=True)
class ClosedFormSolution:
    """A solved quintic IVP.

    ``coefficients`` is the triple the caller asked about; ``solved``
    is the triple actually inverted.  They differ only when solve() had
    to shift c5 (degenerate discriminant or negligible quintic term).
    """

    coefficients: QuinticCoefficients
    case: str
    params: Union[CaseIParameters, CaseIIParameters]
    period: float
    solved: QuinticCoefficients
    nudge: float = 0.0  # solved.c5 - coefficients.c5


def discriminant(c: Coefficients) -> float:
    """delta = 3*c3^2 - 4*c5*(4*c1 + c3 + c5)."""
    c = _coerce(c)
    return 3.0 * c.c3 * c.c3 - 4.0 * c.c5 * (4.0 * c.c1 + c.c3 + c.c5)


def classify(c: Coefficients) -> str:
    """Sort a triple into CASE_I, CASE_II, DEGENERATE or UNSUPPORTED.

    Vanishing of the discriminant is decided up to the absolute
    tolerance 1e-9 * max(1, |3*c3^2|).
    """
    c = _coerce(c)
    if not c.c5 > 0.0:
        return UNSUPPORTED
    delta = discriminant(c)
    if abs(delta) <= 1e-9 * max(1.0, abs(3.0 * c.c3 * c.c3)):
        return DEGENERATE
    if delta < 0.0:
        return CASE_I
    if 6.0 * c.c1 + 3.0 * c.c3 + 2.0 * c.c5 > 0.0:
        return CASE_II
    return UNSUPPORTED


def solve_case1(c: Coefficients) -> CaseIParameters:
    """Construct the negative-discriminant solution parameters."""
    c = _coerce(c)
    label = classify(c)
    if label != CASE_I:
        raise ConstructionError(f"solve_case1 requires a Case I triple, classify gave {label!r}")
    P = c.c1 + c.c3 + c.c5
    Q = 6.0 * c.c1 + 3.0 * c.c3 + 2.0 * c.c5
    k_tilde = 4.0 * c.c1 + 3.0 * c.c3 + 2.0 * c.c5
    if P <= 0.0 or Q <= 0.0:
        raise ConstructionError(f"Case I needs P > 0 and Q > 0, got P={P}, Q={Q}")
    pq = P * Q
    A = (6.0 / pq) ** 0.25 / 2.0
    B = Q / (6.0 * P)
    m = 0.5 - math.sqrt(6.0) / 8.0 * k_tilde / math.sqrt(pq)
    if -1e-12 < m < 0.0:
        m = 0.0
    if not 0.0 <= m < 1.0:
        raise ConstructionError(f"Case I parameter m={m} outside [0, 1)")
    period = 8.0 * A * complete_K(m)
    return CaseIParameters(A, B, m, P, Q, k_tilde, period)


def solve_case2(c: Coefficients) -> CaseIIParameters:
    """Construct the positive-discriminant solution parameters."""
    c = _coerce(c)
    label = classify(c)
    if label != CASE_II:
        raise ConstructionError(f"solve_case2 requires a Case II triple, classify gave {label!r}")
    # h2(s) = a2*s^2 + b2*s + q2 with both roots negative in Case II.
    a2 = 2.0 * c.c5
    b2 = 3.0 * c.c3 + 2.0 * c.c5
    q2 = 6.0 * c.c1 + 3.0 * c.c3 + 2.0 * c.c5
    disc = b2 * b2 - 4.0 * a2 * q2  # equals 3*delta
    if disc <= 0.0:
        raise ConstructionError(f"h2 has no distinct real roots (discriminant {disc})")
    w = -(b2 + math.copysign(math.sqrt(disc), b2)) / 2.0
    r1, r2 = w / a2, q2 / w
    s1, s2 = min(r1, r2), max(r1, r2)
    if not s1 < s2 < 0.0:
        raise ConstructionError(f"Case II requires h2 roots s1 < s2 < 0, got ({s1}, {s2})")
    m = (s2 - s1) / (s1 * (s2 - 1.0))
    if not 0.0 < m < 1.0:
        raise ConstructionError(f"Case II parameter m={m} outside (0, 1)")
    rate = math.sqrt(c.c5 * s1 * (s2 - 1.0) / 3.0)
    period = 4.0 * complete_K(m) / rate
    return CaseIIParameters(s1, s2, m, rate, period)


def solve(c: Coefficients) -> ClosedFormSolution:
    """Dispatch over classify and return a ClosedFormSolution.

    Two borderline situations are solved through a nearby triple, with
    the c5 shift recorded on the result: a c5 that is negligible against
    the other coefficients is lifted to C5_FLOOR times their scale, and
    a degenerate triple (vanishing discriminant) gets c5 nudged
    relatively by +-NUDGE until a proper case appears, Case I preferred.
    """
    c = _coerce(c)
    scale = max(abs(c.c1), abs(c.c3), abs(c.c5))
    if scale == 0.0:
        raise UnsupportedCaseError("cannot solve the all-zero triple")
    target = c
    if abs(c.c5) <= C5_FLOOR * scale:
        target = QuinticCoefficients(c.c1, c.c3, C5_FLOOR * scale, c.provenance)
    label = classify(target)
    if label == CASE_I:
        params = solve_case1(target)
        return ClosedFormSolution(c, CASE_I, params, params.period, target, target.c5 - c.c5)
    if label == CASE_II:
        params = solve_case2(target)
        return ClosedFormSolution(c, CASE_II, params, params.period, target, target.c5 - c.c5)
    if label == UNSUPPORTED:
        raise UnsupportedCaseError(
            f"triple ({c.c1}, {c.c3}, {c.c5}) is outside both solvable cases "
            "(needs c5 > 0 and, for a positive discriminant, 6c1 + 3c3 + 2c5 > 0)"
        )
    for wanted_case, builder in ((CASE_I, solve_case1), (CASE_II, solve_case2)):
        for sign in (1.0, -1.0):
            nudged = QuinticCoefficients(target.c1, target.c3, target.c5 * (1.0 + sign * NUDGE),
                                         target.provenance)
            if classify(nudged) == wanted_case:
                params = builder(nudged)
                return ClosedFormSolution(c, wanted_case, params, params.period, nudged,
                                          nudged.c5 - c.c5)
    raise ConstructionError(f"degenerate triple ({c.c1}, {c.c3}, {c.c5}) resisted the c5 nudge")


def period(solution: ClosedFormSolution) -> float:
    """Period of the solved oscillation (8*A*K(m) or 4*K(m)/rate)."""
    return solution.period


def period_by_quadrature(c: Coefficients) -> float:
    """Period from the time integral, independent of the closed forms.

    Uses u'^2 = (1 - u^2) * h2(u^2) / 6 and u = sin(theta):
    T = 4*sqrt(6) * integral_0^{pi/2} d theta / sqrt(h2(sin^2 theta)).
    """
    c = _coerce(c)

    def h2(s: float) -> float:
        return (6.0 * c.c1 + 3.0 * c.c3 + 2.0 * c.c5) + (3.0 * c.c3 + 2.0 * c.c5) * s + 2.0 * c.c5 * s * s

    out = quad(lambda theta: 1.0 / math.sqrt(h2(math.sin(theta) ** 2)), 0.0, math.pi / 2.0,
               epsabs=1e-14, epsrel=1e-12, limit=200, full_output=1)
    if len(out) > 3:
        raise QuintoscError(f"period quadrature did not converge: {out[3]}")
    return 4.0 * math.sqrt(6.0) * out[0]


def _u_squared(solution: ClosedFormSolution, tau: np.ndarray) -> np.ndarray:
    p = solution.params
    if solution.case == CASE_I:
        # u^2 = sqrt(B) sin^2(phi) / (sqrt(B) sin^2(phi) + cos^2(phi)) with
        # phi = am(2K - t/A)/2; the half-angle squares reduce to cn.
        cn = jacobi_sn_cn_dn(2.0 * complete_K(p.m) - tau / p.A, p.m).cn
        sb = math.sqrt(p.B)
        num = sb * (1.0 - cn)
        return num / (num + (1.0 + cn))
    sn = jacobi_sn_cn_dn(p.rate * tau, p.m).sn
    return p.s1 + p.s1 * (p.s1 - 1.0) / (np.square(sn) - p.s1)


def evaluate(solution: ClosedFormSolution, t):
    """Signed trajectory u(t), extended periodically to all real t.

    The closed forms deliver u^2; the sign follows the quarter-period
    rule of the cosine-like wave: positive on [0, T/4] and [3T/4, T],
    negative in between.
    """
    t_arr = np.asarray(t, dtype=float)
    scalar = t_arr.ndim == 0
    t_arr = np.atleast_1d(t_arr)
    T = solution.period
    tau = np.mod(t_arr, T)
    u = np.sqrt(np.clip(_u_squared(solution, tau), 0.0, None))
    u = np.where((tau > 0.25 * T) & (tau < 0.75 * T), -u, u)
    return float(u[0]) if scalar else u


def derivative(solution: ClosedFormSolution, t):
    """Velocity u'(t) from energy conservation, with the quadrant sign."""
    t_arr = np.asarray(t, dtype=float)
    scalar = t_arr.ndim == 0
    t_arr = np.atleast_1d(t_arr)
    T = solution.period
    tau = np.mod(t_arr, T)
    u = np.atleast_1d(evaluate(solution, tau))
    c = solution.solved
    u2 = np.square(u)
    speed2 = c.c1 * (1.0 - u2) + c.c3 * (1.0 - u2 * u2) / 2.0 + c.c5 * (1.0 - u2 ** 3) / 3.0
    speed = np.sqrt(np.clip(speed2, 0.0, None))
    du = np.where(tau < 0.5 * T, -speed, speed) + 0.0  # the +0.0 drops IEEE negative zeros
    return float(du[0]) if scalar else du
