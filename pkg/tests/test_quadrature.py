"""Adaptive Gauss-Kronrod engine against integrals with closed forms."""

import math

import numpy as np
import pytest

from ratfourier import ConvergenceError
from ratfourier.quadrature import integrate


def test_polynomial_is_exact_on_one_panel():
    # the 15-point rule integrates degree-12 monomials without refinement
    value = integrate(lambda t: t ** 12, 0.0, 2.0, tol=1e-10)
    assert value.real == pytest.approx(2.0 ** 13 / 13.0, rel=1e-14)
    assert value.imag == 0.0


def test_exponential():
    value = integrate(np.exp, 0.0, 1.0, tol=1e-13)
    assert value.real == pytest.approx(math.e - 1.0, rel=1e-13)


def test_oscillatory_with_width_cap():
    value = integrate(lambda t: np.cos(40.0 * t), 0.0, 3.0, tol=1e-12,
                      max_width=0.05)
    assert value.real == pytest.approx(math.sin(120.0) / 40.0, abs=1e-12)


def test_breakpoint_at_a_kink():
    value = integrate(np.abs, -1.0, 2.0, tol=1e-13, breakpoints=[0.0])
    assert value.real == pytest.approx(2.5, rel=1e-14)


def test_complex_integrand():
    value = integrate(lambda t: np.exp(2j * math.pi * t), 0.0, 1.0, tol=1e-13)
    assert abs(value) <= 1e-13


def test_integrand_receives_batched_array():
    seen = []

    def f(t):
        seen.append(t)
        return t ** 2

    value = integrate(f, 0.0, 3.0, tol=1e-12)
    assert value.real == pytest.approx(9.0, rel=1e-14)
    assert all(isinstance(t, np.ndarray) for t in seen)
    # all 15 Kronrod nodes of a panel batch arrive in a single call
    assert all(t.size % 15 == 0 for t in seen)


def test_panel_budget_exhaustion_raises():
    with pytest.raises(ConvergenceError):
        integrate(lambda t: np.cos(200.0 * t * t), 0.0, 10.0, tol=1e-13,
                  max_panels=4)


def test_unresolvable_singularity_raises():
    # 1/|t - 1/3| is not integrable; panel refinement around the pole can
    # never settle, so the engine must give up rather than return a number
    with pytest.raises(ConvergenceError):
        integrate(lambda t: 1.0 / np.abs(t - 1.0 / 3.0), 0.0, 1.0,
                  tol=1e-6, max_panels=3000)


def test_convergence_error_is_a_runtime_error():
    with pytest.raises(RuntimeError):
        integrate(lambda t: np.cos(200.0 * t * t), 0.0, 10.0, tol=1e-13,
                  max_panels=4)
