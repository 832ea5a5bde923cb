"""Voigt function evaluation: pole-residue formula plus integral references.

The Voigt function
    K(x, y) = (y/pi) integral e^(-tau^2) / (y^2 + (x - tau)^2) dtau
is the Lorentzian-weighted integral of the Gaussian.  Substituting the
rational approximant of e^(-nu^2) (built from Gaussian-target forward
coefficients) and closing the contour gives a finite sum over the
approximant's poles: three bracket terms per expansion index m.  The sum
is evaluated verbatim here; its correctness is certified against
voigt_quadrature, an independent adaptive integration of the defining
integral, and against voigt_inverse_route, which reaches K(x, y) through
the inverse-transform approximant instead.
"""

import math
from dataclasses import dataclass

import numpy as np

from .coefficients import CoefficientSet, Direction
from .errors import DenominatorError, DirectionError
from .quadrature import integrate
from .rational_eval import eval_inverse
from .targets import TargetKind

_TWO_PI = 2.0 * math.pi
_DENOM_FLOOR = 1e-300


@dataclass(frozen=True)
class VoigtPoint:
    """Dimensionless detuning x and damping y > 0."""

    x: float
    y: float

    def __post_init__(self):
        if not self.y > 0:
            raise ValueError(f"y > 0 violated (got {self.y})")


def _require_gaussian(coeffs, direction):
    if coeffs.direction is not direction:
        raise DirectionError(
            f"Voigt evaluation needs {direction.value} coefficients, "
            f"got {coeffs.direction.value}"
        )
    if coeffs.target is not TargetKind.GAUSSIAN:
        raise ValueError(
            f"Voigt evaluation needs Gaussian-target coefficients, "
            f"got {coeffs.target.value}"
        )


def voigt_residue_complex(coeffs: CoefficientSet, p: VoigtPoint) -> complex:
    """Full complex value of the residue sum (imaginary part is diagnostic)."""
    _require_gaussian(coeffs, Direction.FORWARD)
    x, y = p.x, p.y
    sigma = coeffs.params.sigma
    a = coeffs.params.a
    g = coeffs.gamma
    alpha = coeffs.alpha
    beta = coeffs.beta

    four_pi2_r2 = 4.0 * math.pi**2 * (x * x + y * y)
    gm = g - 1j * sigma
    gp = g + 1j * sigma
    den1 = g * (four_pi2_r2 + 4.0 * math.pi * x * gm + gm * gm)
    den2 = g * (four_pi2_r2 - 4.0 * math.pi * x * gp + gp * gp)
    w = _TWO_PI * (x + 1j * y) - 1j * sigma
    den3 = _TWO_PI * y * (g * g - w * w)
    for den in (den1, den2, den3):
        if np.min(np.abs(den)) < _DENOM_FLOOR:
            raise DenominatorError(
                "residue denominator collapsed below 1e-300 (degenerate x, y, sigma, gamma)"
            )

    term1 = np.exp(-a * (1j * g + sigma)) * (beta - 1j * alpha * g) / den1
    term2 = 1j * np.exp(a * (1j * g - sigma)) * (alpha * g - 1j * beta) / den2
    term3 = (1j * np.exp(2j * a * math.pi * (x + 1j * y))
             * (alpha * (_TWO_PI * (y - 1j * x) - sigma) - beta) / den3)

    contributions = np.concatenate((term1, -term2, term3))
    total = complex(math.fsum(contributions.real), math.fsum(contributions.imag))
    return _TWO_PI * 1j * y * total


def voigt_residue(coeffs: CoefficientSet, p: VoigtPoint) -> float:
    """Voigt function via the pole-residue sum (real part of the contour value)."""
    return voigt_residue_complex(coeffs, p).real


def _gaussian_cutoff(y: float, bound: float) -> float:
    # smallest integer L whose truncated mass min(erfc(L)/(y sqrt(pi)),
    # e^(-L^2)) drops below bound; erfc underflows to 0 by L = 28, so the
    # loop always terminates
    for L in range(1, 41):
        tail = min(math.erfc(L) / (y * math.sqrt(math.pi)), math.exp(-float(L * L)))
        if tail <= bound:
            return float(L)
    return 40.0


def voigt_quadrature(p: VoigtPoint, tol: float) -> float:
    """Adaptive integration of the defining Voigt integral to tolerance tol."""
    if not tol >= 1e-15:
        raise ValueError(f"tol >= 1e-15 violated (got {tol})")
    x, y = p.x, p.y
    # truncation: outside [-L, L] the integrand is bounded by both
    # e^(-tau^2)/y^2 (Gaussian tail) and e^(-L^2) times the Lorentzian mass
    L = _gaussian_cutoff(y, tol / 10.0)

    def integrand(tau):
        return (y / math.pi) * np.exp(-tau * tau) / (y * y + (x - tau) ** 2)

    breakpoints = []
    if -L < x < L:
        width = y
        while width < 2.0:
            breakpoints.extend((x - width, x + width))
            width *= 3.0
        breakpoints.append(x)
    value = integrate(
        integrand, -L, L, tol,
        max_panels=10**6, breakpoints=breakpoints, max_width=1.0,
    )
    return value.real


def voigt_inverse_route(coeffs: CoefficientSet, p: VoigtPoint,
                        halfwidth: float = 400.0, tol: float = 1e-11) -> float:
    """K(x, y) through the inverse-transform approximant.

    Pairs the inverse approximant of e^(-t^2) with the Lorentzian kernel
    h(t) = y / (pi (y^2 + (x - t)^2)) and integrates over [-halfwidth,
    halfwidth].  No closed-form residue algebra exists for this route; the
    truncation is set by the approximant's O(1/t^2) far tail (its damping
    envelope in the transform variable does not decay along the real t
    axis), so halfwidth trades runtime against the tail bias.
    """
    _require_gaussian(coeffs, Direction.INVERSE)
    if not halfwidth > 0:
        raise ValueError(f"halfwidth > 0 violated (got {halfwidth})")
    x, y = p.x, p.y

    def integrand(t):
        lorentz = y / (math.pi * (y * y + (x - t) ** 2))
        return eval_inverse(coeffs, t) * lorentz

    breakpoints = []
    if -halfwidth < x < halfwidth:
        breakpoints = [x - y, x, x + y]
    max_width = 1.0 / (8.0 * max(coeffs.params.a, 1.0))
    value = integrate(
        integrand, -halfwidth, halfwidth, tol,
        max_panels=10**6, breakpoints=breakpoints, max_width=max_width,
    )
    return value.real
