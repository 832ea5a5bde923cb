"""Evaluators for the rational transform approximants.

The forward form
    F(nu) ~ e^(2 pi i nu a) Sum_m (alpha_m s + beta_m) / (gamma_m^2 + s^2),
    s = sigma + 2 pi i nu,
comes from integrating the damped cosine expansion of the shifted samples
term by term over [0, inf).  The inverse form swaps the sign of the
oscillatory part (s conjugated, phase negated) and consumes coefficient
sets built from transform-domain samples.  error_scan sweeps either
evaluator over a uniform inclusive grid and reports the absolute
difference between a closed-form reference and the REAL part of the
approximant; comparing against the real part is the convention the
published validation numbers were produced with.
"""

from dataclasses import dataclass

import numpy as np

from .coefficients import CoefficientSet, Direction
from .errors import DirectionError, PoleError
from .targets import ReferenceKind, reference_value

_TWO_PI = 2.0 * np.pi
_DENOM_FLOOR = 1e-300


def _pole_sum(coeffs, s):
    # Sum_m (alpha_m s + beta_m) / (gamma_m^2 + s^2) broadcast over a batch of s
    s = s[:, None]
    denom = coeffs.gamma[None, :] ** 2 + s * s
    small = np.abs(denom) < _DENOM_FLOOR
    if np.any(small):
        raise PoleError(
            f"denominator gamma_m^2 + s^2 below {_DENOM_FLOOR:g} in magnitude "
            f"(evaluation point on or next to a pole)"
        )
    return np.sum((coeffs.alpha[None, :] * s + coeffs.beta[None, :]) / denom, axis=1)


def eval_forward(coeffs: CoefficientSet, nu):
    """Forward rational approximant at nu (real scalar or array, complex ok)."""
    if coeffs.direction is not Direction.FORWARD:
        raise DirectionError(
            f"forward evaluator given a {coeffs.direction.value} coefficient set"
        )
    scalar = np.ndim(nu) == 0
    nu = np.atleast_1d(np.asarray(nu, dtype=complex))
    s = coeffs.params.sigma + _TWO_PI * 1j * nu
    out = np.exp(_TWO_PI * 1j * nu * coeffs.params.a) * _pole_sum(coeffs, s)
    return complex(out[0]) if scalar else out


def eval_inverse(coeffs: CoefficientSet, t):
    """Inverse rational approximant at t (real scalar or array, complex ok)."""
    if coeffs.direction is not Direction.INVERSE:
        raise DirectionError(
            f"inverse evaluator given a {coeffs.direction.value} coefficient set"
        )
    scalar = np.ndim(t) == 0
    t = np.atleast_1d(np.asarray(t, dtype=complex))
    s = coeffs.params.sigma - _TWO_PI * 1j * t
    out = np.exp(-_TWO_PI * 1j * t * coeffs.params.a) * _pole_sum(coeffs, s)
    return complex(out[0]) if scalar else out


@dataclass(frozen=True)
class EvaluationCurve:
    """One scan: grid, approximant values, reference values, absolute difference."""

    x: np.ndarray
    approx: np.ndarray
    reference: np.ndarray
    abs_diff: np.ndarray

    def __post_init__(self):
        n = len(self.x)
        if not (len(self.approx) == len(self.reference) == len(self.abs_diff) == n):
            raise ValueError("curve columns must have equal length")
        recomputed = np.abs(self.reference - self.approx.real)
        if not np.array_equal(recomputed, self.abs_diff):
            raise ValueError("abs_diff column inconsistent with reference - Re(approx)")
        for arr in (self.x, self.approx, self.reference, self.abs_diff):
            arr.setflags(write=False)

    @property
    def max_abs_diff(self) -> float:
        return float(np.max(self.abs_diff))

    def write(self, path) -> None:
        """Write the curve as delimited text, 17 significant digits per field."""
        g = lambda v: format(float(v), ".17g")
        rows = ["x,approx_re,approx_im,reference,abs_diff"]
        for i in range(len(self.x)):
            rows.append(",".join((
                g(self.x[i]), g(self.approx[i].real), g(self.approx[i].imag),
                g(self.reference[i]), g(self.abs_diff[i]),
            )))
        with open(path, "w") as fh:
            fh.write("\n".join(rows) + "\n")


def error_scan(coeffs: CoefficientSet, reference: ReferenceKind,
               lo: float, hi: float, count: int) -> EvaluationCurve:
    """Scan the approximant against a reference on an inclusive uniform grid."""
    if not lo < hi:
        raise ValueError(f"lo < hi violated (got {lo}, {hi})")
    if count < 2:
        raise ValueError(f"count >= 2 violated (got {count})")
    x = np.linspace(lo, hi, count)
    if coeffs.direction is Direction.FORWARD:
        approx = eval_forward(coeffs, x)
    else:
        approx = eval_inverse(coeffs, x)
    ref = np.asarray(reference_value(reference, x), dtype=float)
    return EvaluationCurve(
        x=x, approx=approx, reference=ref, abs_diff=np.abs(ref - approx.real)
    )
