"""Expansion coefficients for the rational transform approximant.

The damped sample set v_n = f(nh - a) e^{sigma n h} is folded against a
grid of odd-harmonic frequencies gamma_m = pi (2m - 1) / (2^M h).  Each
frequency gets a cosine moment alpha_m and a sine moment beta_m; together
with gamma they determine the rational approximant evaluated in
rational_eval.  Direction tags whether the samples came from the original
function (forward transform) or from its transform (inverse path); the
coefficient formulas are identical either way.
"""

import json
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np

from .errors import FileFormatError, RangeError
from .targets import ApproxParams, SampleSet, TargetKind

MAX_SAMPLES = 10_000

_FIELDS = (
    "a", "M", "N", "h", "sigma", "k", "delta",
    "direction", "target", "alpha", "beta", "gamma",
)


class Direction(Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


def gamma_of(m: int, params: ApproxParams) -> float:
    """Frequency of the m-th expansion term, m counted from 1."""
    if not 1 <= m <= params.terms:
        raise RangeError(
            f"term index m must be in 1..{params.terms} for M={params.M} (got {m})"
        )
    return math.pi * (2 * m - 1) / (2 ** params.M * params.h)


def gamma_grid(params: ApproxParams) -> np.ndarray:
    m = np.arange(1, params.terms + 1)
    return np.pi * (2 * m - 1) / (2 ** params.M * params.h)


@dataclass(frozen=True)
class CoefficientSet:
    """Frozen (alpha, beta, gamma) triple plus the parameters that built it."""

    params: ApproxParams
    direction: Direction
    target: TargetKind
    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray

    def __post_init__(self):
        terms = self.params.terms
        for name in ("alpha", "beta", "gamma"):
            arr = getattr(self, name)
            if arr.shape != (terms,):
                raise ValueError(
                    f"{name} must have {terms} entries for M={self.params.M} "
                    f"(got shape {arr.shape})"
                )
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} contains non-finite entries")
            arr.setflags(write=False)
        if np.any(self.gamma <= 0) or np.any(np.diff(self.gamma) <= 0):
            raise ValueError("gamma grid must be positive and strictly increasing")


def compute_coefficients(samples: SampleSet, direction: Direction = Direction.FORWARD) -> CoefficientSet:
    """Fold a damped sample set into expansion coefficients.

    Products and sums run in numpy's longdouble and only the final alpha,
    beta are rounded to binary64.  The damped samples span many decades
    and the trig projections cancel heavily, so binary64 product rounding
    alone would inject more error into the final approximant than the
    approximation method itself leaves behind.  On platforms whose
    longdouble is plain binary64 the results degrade gracefully.
    """
    params = samples.params
    if params.N + 1 > MAX_SAMPLES:
        raise RangeError(
            f"sample count N+1 must not exceed {MAX_SAMPLES} (got {params.N + 1})"
        )
    gamma = gamma_grid(params)
    ld = np.longdouble
    t = np.arange(params.N + 1, dtype=ld) * ld(params.h)
    v = samples.values.astype(np.clongdouble)
    scale = ld(2.0) ** (1 - params.M)
    pi_h = ld(np.pi) / (ld(2.0) ** params.M * ld(params.h))

    alpha = np.empty(params.terms, dtype=complex)
    beta = np.empty(params.terms, dtype=complex)
    for i in range(params.terms):
        g = pi_h * ld(2 * i + 1)
        phase = g * t
        alpha[i] = complex((v * np.cos(phase)).sum() * scale)
        beta[i] = complex((v * np.sin(phase)).sum() * g * scale)
    return CoefficientSet(
        params=params,
        direction=direction,
        target=samples.target,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
    )


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def save_coefficients(coeffs: CoefficientSet, path) -> None:
    """Write a coefficient file; field order and float formatting are fixed.

    Floats carry 17 significant digits, enough to round-trip any double, so
    saving and reloading reproduces the set bit for bit.
    """
    p = coeffs.params
    pair = lambda z: f"[{_fmt(z.real)}, {_fmt(z.imag)}]"
    lines = [
        "{",
        f'  "a": {_fmt(p.a)},',
        f'  "M": {p.M},',
        f'  "N": {p.N},',
        f'  "h": {_fmt(p.h)},',
        f'  "sigma": {_fmt(p.sigma)},',
        f'  "k": {p.k},',
        f'  "delta": {_fmt(p.delta)},',
        f'  "direction": "{coeffs.direction.value}",',
        f'  "target": "{coeffs.target.value}",',
        f'  "alpha": [{", ".join(pair(z) for z in coeffs.alpha)}],',
        f'  "beta": [{", ".join(pair(z) for z in coeffs.beta)}],',
        f'  "gamma": [{", ".join(_fmt(g) for g in coeffs.gamma)}]',
        "}",
    ]
    Path(path).write_text("\n".join(lines) + "\n")


def _complex_column(raw, name, terms):
    if not isinstance(raw, list) or len(raw) != terms:
        raise FileFormatError(f"{name} must be a list of {terms} [re, im] pairs")
    out = np.empty(terms, dtype=complex)
    for i, entry in enumerate(raw):
        if (not isinstance(entry, list) or len(entry) != 2
                or not all(isinstance(v, (int, float)) for v in entry)):
            raise FileFormatError(f"{name}[{i}] is not a [re, im] pair")
        out[i] = complex(entry[0], entry[1])
    return out


def load_coefficients(path) -> CoefficientSet:
    """Read a coefficient file back, validating structure and consistency."""
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise FileFormatError(f"cannot read coefficient file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"coefficient file is not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise FileFormatError("coefficient file must hold a single JSON object")
    missing = [k for k in _FIELDS if k not in raw]
    if missing:
        raise FileFormatError(f"coefficient file is missing fields: {', '.join(missing)}")
    extra = [k for k in raw if k not in _FIELDS]
    if extra:
        raise FileFormatError(f"coefficient file has unknown fields: {', '.join(extra)}")

    try:
        params = ApproxParams(
            a=float(raw["a"]), M=int(raw["M"]), N=int(raw["N"]), h=float(raw["h"]),
            sigma=float(raw["sigma"]), k=int(raw["k"]), delta=float(raw["delta"]),
        )
    except (TypeError, ValueError) as exc:
        raise FileFormatError(f"invalid parameters in coefficient file: {exc}") from None
    try:
        direction = Direction(raw["direction"])
        target = TargetKind(raw["target"])
    except ValueError as exc:
        raise FileFormatError(str(exc)) from None

    alpha = _complex_column(raw["alpha"], "alpha", params.terms)
    beta = _complex_column(raw["beta"], "beta", params.terms)
    gamma_stored = np.asarray(raw["gamma"], dtype=float)
    expected = gamma_grid(params)
    if gamma_stored.shape != expected.shape or not np.allclose(
            gamma_stored, expected, rtol=1e-14, atol=0.0):
        raise FileFormatError("gamma grid does not match the stored (M, h)")
    # keep the recomputed grid so downstream arithmetic sees exact doubles
    return CoefficientSet(
        params=params, direction=direction, target=target,
        alpha=alpha, beta=beta, gamma=expected,
    )
