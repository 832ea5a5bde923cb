"""Catalogue of sampled target functions and the damped grid sampler.

The approximation pipeline samples a shifted target function f(t - a),
premultiplied by the growth factor e^(sigma*t), on the uniform grid
t_n = n*h for n = 0..N.  Damping the resulting cosine expansion by
e^(-sigma*t) then suppresses all periodic replicas except the one near the
origin, which is what makes the closed-form integration (and hence the
rational approximant) valid on the whole positive axis.

Only the catalogue below is supported: the smooth rectangle surrogate
1/((2t)^(2k) + 1) whose transform approximates sinc(pi*nu), its Gaussian
alternative exp(-(2t)^(2k)), the odd Gaussian-derivative bump whose
transform is nu*exp(-nu^2), and the plain Gaussian bump paired with
exp(-nu^2).
"""

from __future__ import annotations

import math
import sys
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

_LOG_MAX = math.log(sys.float_info.max)  # ~709.78, binary64 overflow threshold

SQRT_PI = math.sqrt(math.pi)


class GridCoverageWarning(UserWarning):
    """The sample grid does not span the target's effective support."""


class TargetKind(Enum):
    """Sampled functions f(t) feeding the coefficient computation."""

    RECT_SURROGATE = "rect-surrogate"
    RECT_SURROGATE_GAUSS_ALT = "rect-surrogate-gauss"
    GAUSSIAN_DERIVATIVE = "gauss-derivative"
    GAUSSIAN = "gauss"


class ReferenceKind(Enum):
    """Closed-form references the approximants are scanned against."""

    SINC = "sinc"
    NU_GAUSS = "nu-gauss"
    GAUSS = "gauss"
    RECT = "rect"


@dataclass(frozen=True)
class ApproxParams:
    """Tunable parameters of one approximation run.

    a      shift moving the target support into the first quadrant
    M      truncation order; the expansion has 2^(M-1) terms
    N      last sample index (N + 1 samples on t_n = n*h)
    h      grid step
    sigma  damping constant of the e^(sigma*t) premultiplier
    k      surrogate half-exponent (the rectangle surrogate uses power 2k)
    delta  support margin; documents a = 1/2 + delta for the surrogate
    """

    a: float
    M: int
    N: int
    h: float
    sigma: float
    k: int = 35
    delta: float = 0.1

    def __post_init__(self):
        if self.M < 1:
            raise ValueError(f"M >= 1 violated (got {self.M})")
        if self.M > 24:
            raise ValueError(f"M <= 24 violated (got {self.M}); term count 2^(M-1) is not desk-scale")
        if not self.h > 0:
            raise ValueError(f"h > 0 violated (got {self.h})")
        if self.sigma < 0:
            raise ValueError(f"sigma >= 0 violated (got {self.sigma})")
        if self.k < 1:
            raise ValueError(f"k >= 1 violated (got {self.k})")
        if self.N < 0:
            raise ValueError(f"N >= 0 violated (got {self.N})")
        if not self.delta > 0:
            raise ValueError(f"delta > 0 violated (got {self.delta})")
        if not math.isfinite(self.period):
            raise ValueError("period 2^(M+1)*h must be finite")
        if self.N * self.h < 2.0 * self.a:
            warnings.warn(
                f"sample grid ends at N*h = {self.N * self.h:g} but the shifted target "
                f"effectively covers [0, {2.0 * self.a:g}]",
                GridCoverageWarning,
                stacklevel=2,
            )

    @property
    def period(self) -> float:
        """Period T = 2^(M+1)*h of the truncated cosine expansion."""
        return 2.0 ** (self.M + 1) * self.h

    @property
    def terms(self) -> int:
        """Number of expansion terms, 2^(M-1)."""
        return 1 << (self.M - 1)


def rect_surrogate(t, k: int = 35):
    """Smooth stand-in 1/((2t)^(2k) + 1) for the rectangular function.

    Total on the real line: for |2t| > 1 the power is taken in the log
    domain, so arguments that would overflow (2t)^(2k) return the correct
    subnormal/zero tail instead of inf.  Accepts scalars or arrays.
    """
    if k < 1:
        raise ValueError(f"k >= 1 violated (got {k})")
    scalar = np.ndim(t) == 0
    x = np.abs(2.0 * np.atleast_1d(np.asarray(t, dtype=float)))
    out = np.empty_like(x)
    small = x <= 1.0
    out[small] = 1.0 / (x[small] ** (2 * k) + 1.0)
    if not small.all():
        u = 2 * k * np.log(x[~small])
        out[~small] = np.where(u > 700.0, np.exp(-u), 1.0 / (np.exp(np.minimum(u, 700.0)) + 1.0))
    return float(out[0]) if scalar else out


def _rect_gauss_alt(t, k):
    # exp(-(2t)^(2k)); same log-domain guard as the primary surrogate.
    x = np.abs(2.0 * np.atleast_1d(np.asarray(t, dtype=float)))
    out = np.empty_like(x)
    small = x <= 1.0
    out[small] = np.exp(-(x[small] ** (2 * k)))
    if not small.all():
        u = 2 * k * np.log(x[~small])
        out[~small] = np.where(u > 700.0, 0.0, np.exp(-np.exp(np.minimum(u, 700.0))))
    return out


def target_value(kind: TargetKind, t, k: int = 35):
    """Evaluate the target function `kind` at t (scalar or array, complex result)."""
    scalar = np.ndim(t) == 0
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if kind is TargetKind.RECT_SURROGATE:
        out = rect_surrogate(t, k) + 0j
    elif kind is TargetKind.RECT_SURROGATE_GAUSS_ALT:
        out = _rect_gauss_alt(t, k) + 0j
    elif kind is TargetKind.GAUSSIAN_DERIVATIVE:
        out = math.pi ** 1.5 * 1j * t * np.exp(-((math.pi * t) ** 2))
    elif kind is TargetKind.GAUSSIAN:
        out = SQRT_PI * np.exp(-((math.pi * t) ** 2)) + 0j
    else:
        raise ValueError(f"unknown target kind {kind!r}")
    return complex(out[0]) if scalar else out


@dataclass(frozen=True)
class SampleSet:
    """Damped samples v_n = f(n*h - a) * e^(sigma*n*h), n = 0..N."""

    params: ApproxParams
    target: TargetKind
    values: np.ndarray

    def __post_init__(self):
        if len(self.values) != self.params.N + 1:
            raise ValueError(
                f"sample count {len(self.values)} != N + 1 = {self.params.N + 1}"
            )
        if not np.all(np.isfinite(self.values)):
            raise OverflowError(
                "non-finite sample value; sigma*N*h drives e^(sigma*n*h) out of range"
            )
        self.values.setflags(write=False)


def sample_grid(target: TargetKind, params: ApproxParams) -> SampleSet:
    """Sample f(n*h - a) * e^(sigma*n*h) on the grid n = 0..N."""
    if params.sigma * params.N * params.h > _LOG_MAX:
        raise OverflowError(
            f"e^(sigma*N*h) overflows binary64 (sigma*N*h = {params.sigma * params.N * params.h:g})"
        )
    n = np.arange(params.N + 1)
    tn = n * params.h - params.a
    weights = np.exp(params.sigma * params.h * n)
    values = np.asarray(target_value(target, tn, params.k), dtype=complex) * weights
    return SampleSet(params=params, target=target, values=values)


def reference_value(kind: ReferenceKind, x):
    """Closed-form reference curves (scalar or array).

    SINC is sin(pi*x)/(pi*x) with the removable singularity filled by 1;
    RECT is the indicator of |x| < 1/2 with value 1/2 on the boundary.
    """
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if kind is ReferenceKind.SINC:
        out = np.sinc(x)
    elif kind is ReferenceKind.NU_GAUSS:
        out = x * np.exp(-(x**2))
    elif kind is ReferenceKind.GAUSS:
        out = np.exp(-(x**2))
    elif kind is ReferenceKind.RECT:
        ax = np.abs(x)
        out = np.where(ax < 0.5, 1.0, np.where(ax == 0.5, 0.5, 0.0))
    else:
        raise ValueError(f"unknown reference kind {kind!r}")
    return float(out[0]) if scalar else out
