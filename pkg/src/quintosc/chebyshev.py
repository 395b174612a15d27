"""Fifth-order Chebyshev projection of odd restoring forces.

An odd force f on [-1, 1] is replaced by its projection onto T1, T3, T5
with respect to the Chebyshev weight,

    alpha_n = (2/pi) * integral_{-1}^{1} T_n(s) f(s) / sqrt(1 - s^2) ds,

evaluated by Gauss-Chebyshev quadrature, which absorbs the weight exactly
and is spectrally accurate for analytic forces.  Rewriting the projection
in the monomial basis turns the original oscillator into the quintic one
solved in module quintic.

For the catalogue models the projection integrals also have closed forms
in terms of complete elliptic integrals (the J_n moments below, compare
Byrd & Friedman 236.16 / 331.01-03); both routes are exposed so they can
be checked against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import models
from .elliptic import complete_E, complete_K
from .errors import DomainError, EvaluationError


@dataclass(frozen=True)
class ChebyshevOddCoefficients:
    """Projection coefficients (alpha1, alpha3, alpha5).

    Even-index coefficients of an odd integrand vanish identically and
    are not stored.
    """

    alpha1: float
    alpha3: float
    alpha5: float


@dataclass(frozen=True)
class QuinticCoefficients:
    """Monomial coefficients of the approximating force -(c1*u + c3*u^3 + c5*u^5).

    ``provenance`` records how the triple was obtained: "quadrature" for
    the Gauss-Chebyshev route, "closed_form" for the elliptic-moment
    route, "manual" for hand-entered triples.
    """

    c1: float
    c3: float
    c5: float
    provenance: str = "manual"

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c1, self.c3, self.c5)


@dataclass(frozen=True)
class EllipticMoments:
    """Closed-form values of J_n(a) = integral s^n / sqrt((1-s^2)(1+a^2 s^2)) ds over [-1, 1]."""

    j2: float
    j4: float
    j6: float
    a: float


class PiMoments(NamedTuple):
    """Chebyshev-weight moments w_n = integral s^n / sqrt(1-s^2) ds over [-1, 1]."""

    w2: float
    w4: float
    w6: float
    w8: float


PI_MOMENTS = PiMoments(math.pi / 2.0, 3.0 * math.pi / 8.0, 5.0 * math.pi / 16.0, 35.0 * math.pi / 128.0)


def project_odd_quintic(force: Callable, nodes: int = 64) -> ChebyshevOddCoefficients:
    """Project an odd force onto T1, T3, T5 by Gauss-Chebyshev quadrature.

    ``force`` may accept arrays or plain floats.  ``nodes`` is the number
    of quadrature abscissae; the rule is exact for polynomial integrands
    of degree <= 2*nodes - 1.
    """
    if nodes < 16:
        raise DomainError(f"project_odd_quintic requires nodes >= 16, got {nodes}")
    theta = (2.0 * np.arange(1, nodes + 1) - 1.0) * (math.pi / (2.0 * nodes))
    s = np.cos(theta)
    try:
        vals = np.asarray(force(s), dtype=float)
        if vals.shape != s.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([float(force(float(x))) for x in s])
    finite = np.isfinite(vals)
    if not finite.all():
        raise EvaluationError("force returned a non-finite value", float(s[np.argmin(finite)]))
    # T_n(cos theta) = cos(n theta), so the weights collapse to 2/nodes.
    scale = 2.0 / nodes
    return ChebyshevOddCoefficients(
        scale * float(np.cos(theta) @ vals),
        scale * float(np.cos(3.0 * theta) @ vals),
        scale * float(np.cos(5.0 * theta) @ vals),
    )


def to_monomial(alphas: ChebyshevOddCoefficients, provenance: str = "quadrature") -> QuinticCoefficients:
    """Rewrite alpha1*T1 + alpha3*T3 + alpha5*T5 as -(c1*u + c3*u^3 + c5*u^5)."""
    a1, a3, a5 = alphas.alpha1, alphas.alpha3, alphas.alpha5
    return QuinticCoefficients(
        -(a1 - 3.0 * a3 + 5.0 * a5),
        -4.0 * (a3 - 5.0 * a5),
        -16.0 * a5,
        provenance,
    )


_SERIES_CUTOFF = 0.25


def _moments_by_series(a: float) -> EllipticMoments:
    # Below the cutoff the K/E brackets cancel to order a^4 and a^6 and
    # the prefactors 1/a^4, 1/a^6 amplify the rounding, so expand the
    # weight binomially instead; terms shrink by a^2 per order.
    a2 = a * a
    weights = [math.pi]
    for j in range(1, 64):
        weights.append(weights[-1] * (2 * j - 1) / (2 * j))
    totals = [0.0, 0.0, 0.0]
    coeff = 1.0
    for k in range(60):
        for i in (1, 2, 3):
            totals[i - 1] += coeff * weights[i + k]
        coeff *= -a2 * (2 * k + 1) / (2 * k + 2)
        if abs(coeff) < 1e-18:
            break
    return EllipticMoments(totals[0], totals[1], totals[2], a)


def closed_form_moments(a: float) -> EllipticMoments:
    """Elliptic moments J2, J4, J6 for the weight 1/sqrt(1 + a^2 s^2), a > 0."""
    if not a > 0.0:
        raise DomainError(f"closed_form_moments requires a > 0, got a={a}")
    if a <= _SERIES_CUTOFF:
        return _moments_by_series(a)
    a2 = a * a
    J = math.hypot(1.0, a)
    m = a2 / (1.0 + a2)
    K = complete_K(m)
    E = complete_E(m)
    je = J * E
    kj = K / J
    j2 = 2.0 / a2 * (je - kj)
    j4 = 2.0 / (3.0 * a2 * a2) * (2.0 * (a2 - 1.0) * je - (a2 - 2.0) * kj)
    j6 = 2.0 / (15.0 * a2 ** 3) * ((8.0 * a2 * a2 - 7.0 * a2 + 8.0) * je - (4.0 * a2 * a2 - 3.0 * a2 + 8.0) * kj)
    return EllipticMoments(j2, j4, j6, a)


def _alphas_from_moments(m2: float, m4: float, m6: float) -> ChebyshevOddCoefficients:
    # All catalogue forces are -(u * weight(u)), so the projections share
    # one pattern in the even moments M_n of the weight.
    C = -2.0 / math.pi
    return ChebyshevOddCoefficients(
        C * m2,
        C * (4.0 * m4 - 3.0 * m2),
        C * (16.0 * m6 - 20.0 * m4 + 5.0 * m2),
    )


def model_coefficients(model: models.OscillatorModel) -> QuinticCoefficients:
    """Quintic coefficients of a catalogue model via the closed-form moments.

    The generic model has no closed form and falls back to the quadrature
    route (the provenance tag says which path produced the result).
    """
    if model.kind == models.GENERIC:
        return to_monomial(project_odd_quintic(lambda u: models.restoring_force(model, u)), "quadrature")
    a, b = model.a, model.b
    jm = closed_form_moments(a)
    w = PI_MOMENTS
    if model.kind == models.RELATIVISTIC:
        m2, m4, m6 = jm.j2, jm.j4, jm.j6
    elif model.kind == models.CABLE_MASS:
        m2 = w.w2 + b * jm.j2
        m4 = w.w4 + b * jm.j4
        m6 = w.w6 + b * jm.j6
    else:
        a2 = a * a
        m2 = w.w2 + a2 * w.w4 + b * jm.j2
        m4 = w.w4 + a2 * w.w6 + b * jm.j4
        m6 = w.w6 + a2 * w.w8 + b * jm.j6
    return to_monomial(_alphas_from_moments(m2, m4, m6), "closed_form")
