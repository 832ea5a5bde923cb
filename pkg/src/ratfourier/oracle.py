"""Brute-force integral references used to certify the approximants.

Two validators, both driven by the adaptive Gauss-Kronrod engine and
sharing no arithmetic with the rational evaluators:

* fourier_forward_quadrature computes F(nu) = integral f(t - shift)
  e^(-2 pi i nu t) dt directly from the target catalogue.
* damped_expansion_quadrature integrates the damped cosine expansion
  reconstructed from a coefficient set, times the transform kernel, over
  [0, upper].  With upper = infinity the damping envelope e^(-sigma t)
  justifies truncating where the envelope falls below 1e-18.

Both refuse |nu| > 100: past that the kernel oscillation would need more
panels than a spot-check oracle should ever spend.
"""

import math
from dataclasses import dataclass

import numpy as np

from .coefficients import CoefficientSet, Direction
from .errors import DampingError, DirectionError, RangeError
from .quadrature import integrate
from .targets import TargetKind, target_value

_NU_LIMIT = 100.0
_ENVELOPE_CUTOFF = 1e-18
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class QuadratureSpec:
    """Domain, tolerance and panel budget for one oracle integration."""

    lo: float
    hi: float
    tol: float
    max_panels: int = 10**6

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"lo < hi violated (got {self.lo}, {self.hi})")
        if not self.tol >= 1e-15:
            raise ValueError(f"tol >= 1e-15 violated (got {self.tol})")
        if not 0 < self.max_panels <= 10**7:
            raise ValueError(f"0 < max_panels <= 1e7 violated (got {self.max_panels})")


def _check_nu(nu):
    if abs(nu) > _NU_LIMIT:
        raise RangeError(
            f"|nu| <= {_NU_LIMIT:g} violated (got {nu}); oscillation too fast for the oracle"
        )


def fourier_forward_quadrature(target: TargetKind, shift: float, nu: float,
                               spec: QuadratureSpec, k: int = 35) -> complex:
    """Direct transform of the shifted target over [spec.lo, spec.hi]."""
    _check_nu(nu)

    def integrand(t):
        return target_value(target, t - shift, k) * np.exp(-_TWO_PI * 1j * nu * t)

    breakpoints = []
    if target in (TargetKind.RECT_SURROGATE, TargetKind.RECT_SURROGATE_GAUSS_ALT):
        # surrogate shoulders: the only places with appreciable curvature
        breakpoints = [shift - 0.5, shift + 0.5]
    max_width = None if nu == 0 else 1.0 / (8.0 * abs(nu))
    return integrate(
        integrand, spec.lo, spec.hi, spec.tol,
        max_panels=spec.max_panels, breakpoints=breakpoints, max_width=max_width,
    )


def damped_expansion_quadrature(coeffs: CoefficientSet, nu: float, upper,
                                spec: QuadratureSpec) -> complex:
    """Transform of the damped cosine expansion over [0, upper].

    The expansion is rebuilt from (alpha, beta, gamma) via the exact
    identity sum_n v_n cos(gamma (t - nh)) = alpha cos(gamma t)
    + (beta/gamma) sin(gamma t) per term, so the integrand matches the
    pre-rearrangement double-sum form without quadratic cost.  spec.lo and
    spec.hi are ignored; the domain is dictated by `upper`.
    """
    if coeffs.direction is not Direction.FORWARD:
        raise DirectionError(
            f"damped-expansion oracle needs forward coefficients, got {coeffs.direction.value}"
        )
    _check_nu(nu)
    sigma = coeffs.params.sigma
    if math.isinf(upper):
        if sigma <= 0:
            raise DampingError(
                "infinite upper limit needs sigma > 0 to damp the expansion"
            )
        upper = -math.log(_ENVELOPE_CUTOFF) / sigma
    if not upper > 0:
        raise ValueError(f"upper > 0 violated (got {upper})")

    gamma = coeffs.gamma
    alpha = coeffs.alpha
    beta_over_gamma = coeffs.beta / gamma

    def integrand(t):
        phase = t[:, None] * gamma[None, :]
        bracket = np.cos(phase) @ alpha + np.sin(phase) @ beta_over_gamma
        return bracket * np.exp(-(sigma + _TWO_PI * 1j * nu) * t)

    osc = 1.0 / (8.0 * abs(nu)) if nu != 0 else math.inf
    max_width = min(4.0 / gamma[-1], osc)
    return integrate(
        integrand, 0.0, upper, spec.tol,
        max_panels=spec.max_panels, max_width=max_width,
    )
