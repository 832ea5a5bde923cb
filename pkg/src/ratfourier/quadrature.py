"""Adaptive panel integration with an embedded 7/15-point Gauss-Kronrod rule.

Plain global-adaptive scheme: evaluate every panel with the 15-point
Kronrod rule, estimate the panel error as the modulus of the difference
against the embedded 7-point Gauss result, and bisect the worst panel until
the summed estimate meets the tolerance.  Integrands are called vectorized
(one call per batch of nodes) and may return real or complex values.
"""

import heapq
import math
from itertools import count

import numpy as np

from .errors import ConvergenceError

# 7/15 Gauss-Kronrod abscissae and weights on [-1, 1].
_XK = np.array([
    -0.99145537112081264, -0.94910791234275852, -0.86486442335976907,
    -0.74153118559939444, -0.58608723546769113, -0.40584515137739717,
    -0.20778495500789847, 0.0, 0.20778495500789847, 0.40584515137739717,
    0.58608723546769113, 0.74153118559939444, 0.86486442335976907,
    0.94910791234275852, 0.99145537112081264,
])
_WK = np.array([
    0.022935322010529225, 0.063092092629978553, 0.10479001032225018,
    0.14065325971552592, 0.16900472663926790, 0.19035057806478541,
    0.20443294007529889, 0.20948214108472783, 0.20443294007529889,
    0.19035057806478541, 0.16900472663926790, 0.14065325971552592,
    0.10479001032225018, 0.063092092629978553, 0.022935322010529225,
])
_WG = np.array([
    0.12948496616886969, 0.27970539148927667, 0.38183005050511894,
    0.41795918367346939, 0.38183005050511894, 0.27970539148927667,
    0.12948496616886969,
])
_GAUSS_SLOTS = slice(1, 15, 2)  # the 7 Gauss nodes sit at the odd Kronrod slots


def _eval_panels(f, edges):
    """Apply the rule to a batch of panels; returns (values, error estimates)."""
    mid = 0.5 * (edges[:, 0] + edges[:, 1])
    half = 0.5 * (edges[:, 1] - edges[:, 0])
    nodes = mid[:, None] + half[:, None] * _XK[None, :]
    fv = np.asarray(f(nodes.ravel())).reshape(nodes.shape)
    resk = (fv @ _WK) * half
    resg = (fv[:, _GAUSS_SLOTS] @ _WG) * half
    return resk, np.abs(resk - resg)


def _initial_edges(lo, hi, breakpoints, max_width):
    pts = [lo] + sorted(p for p in set(breakpoints) if lo < p < hi) + [hi]
    edges = []
    for left, right in zip(pts, pts[1:]):
        nsub = 1
        if max_width is not None and max_width > 0:
            nsub = max(1, math.ceil((right - left) / max_width))
        cuts = np.linspace(left, right, nsub + 1)
        edges.extend(zip(cuts[:-1], cuts[1:]))
    return np.array(edges)


def integrate(f, lo, hi, tol, max_panels=10**6, breakpoints=(), max_width=None):
    """Integrate f over [lo, hi] to absolute tolerance tol.

    f must accept a 1-D ndarray of abscissae and return values of matching
    shape.  `breakpoints` seeds panel edges at known features; `max_width`
    caps the initial panel width (needed for oscillatory integrands so the
    error estimate is meaningful from the start).  Raises ConvergenceError
    if more than max_panels panels would be needed.
    """
    if not lo < hi:
        raise ValueError(f"integration bounds must satisfy lo < hi (got {lo}, {hi})")
    edges = _initial_edges(lo, hi, breakpoints, max_width)
    if len(edges) > max_panels:
        raise ConvergenceError(
            f"initial subdivision needs {len(edges)} panels, budget is {max_panels}"
        )
    values, errors = _eval_panels(f, edges)

    tick = count()  # tie-breaker keeps heap ordering total and deterministic
    heap = [
        (-errors[i], next(tick), edges[i, 0], edges[i, 1], values[i], errors[i])
        for i in range(len(edges))
    ]
    heapq.heapify(heap)
    total_err = float(np.sum(errors))
    n_panels = len(heap)

    while total_err > tol:
        if n_panels + 1 > max_panels:
            raise ConvergenceError(
                f"panel budget {max_panels} exhausted (error estimate {total_err:.3e}, tol {tol:.3e})"
            )
        neg_err, _, left, right, value, err = heapq.heappop(heap)
        width = right - left
        if err <= 0.0 or width < 64.0 * np.finfo(float).eps * max(abs(left), abs(right), 1.0):
            # worst panel is at the rounding floor; tol is unreachable
            heapq.heappush(heap, (neg_err, next(tick), left, right, value, err))
            raise ConvergenceError(
                f"panel refinement hit the rounding floor at estimate {total_err:.3e} "
                f"(tol {tol:.3e})"
            )
        midpoint = 0.5 * (left + right)
        sub = np.array([(left, midpoint), (midpoint, right)])
        vals2, errs2 = _eval_panels(f, sub)
        total_err += float(errs2.sum()) - err
        for i in range(2):
            heapq.heappush(
                heap, (-errs2[i], next(tick), sub[i, 0], sub[i, 1], vals2[i], errs2[i])
            )
        n_panels += 1

    # fsum is order-independent, so the heap layout cannot leak into the result
    re = math.fsum(float(np.real(entry[4])) for entry in heap)
    im = math.fsum(float(np.imag(entry[4])) for entry in heap)
    return complex(re, im)
