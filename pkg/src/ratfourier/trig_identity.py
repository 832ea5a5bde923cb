"""Truncated cosine products, their exact sum form, and the derived sinc series.

The M-factor cosine product prod_{m=1..M} cos(t/2^m) (the truncated Viete
product for sinc) rewrites exactly as the average of 2^(M-1) cosines with
odd-multiple arguments:

    prod_{m=1..M} cos(t/2^m) = 2^(1-M) * sum_{m=1..2^(M-1)} cos((2m-1)*t/2^M)

Both sides are implemented independently so each can certify the other.
Substituting t -> pi*t/h turns the sum side into a periodic cosine-series
approximation of sinc(pi*t/h) with period T = 2^(M+1)*h, valid on
|t| <= T/4.  This module is the correctness anchor for everything
downstream, so it favours accuracy over speed: every cosine argument is
recomputed directly (no recurrences) and the sum is accumulated with
math.fsum, which tracks rounding exactly.
"""

import math

import numpy as np

from .errors import RangeError
from .targets import ApproxParams

MAX_ORDER = 24  # 2^(M-1) summation terms; larger orders are not desk-scale


def _check_order(M: int):
    if M < 1 or M > MAX_ORDER:
        raise RangeError(f"truncation order M must be in 1..{MAX_ORDER} (got {M})")


def viete_product(t: float, M: int) -> float:
    """Truncated cosine product prod_{m=1..M} cos(t / 2^m)."""
    _check_order(M)
    prod = 1.0
    for m in range(1, M + 1):
        prod *= math.cos(t / 2.0**m)
    return prod


def cosine_sum(t: float, M: int) -> float:
    """Sum form 2^(1-M) * sum_{m=1..2^(M-1)} cos((2m-1) * t / 2^M).

    Equals viete_product(t, M) exactly in real arithmetic; in binary64 the
    two sides agree to ~1e-13 over |t| <= 100 for M up to MAX_ORDER.
    """
    _check_order(M)
    terms = 1 << (M - 1)
    odd = 2.0 * np.arange(1, terms + 1) - 1.0
    values = np.cos(odd * (t / 2.0**M))
    return math.fsum(values.tolist()) / terms


def sinc_series(t: float, params: ApproxParams) -> float:
    """Periodic cosine-series approximation of sinc(pi*t/h).

    2^(1-M) * sum_{m=1..2^(M-1)} cos(pi*(2m-1)*t / (2^M*h)).  The series
    has period T = 2^(M+1)*h and approximates sinc only on |t| <= T/4;
    staying inside that window is the caller's job.
    """
    return cosine_sum(math.pi * t / params.h, params.M)
