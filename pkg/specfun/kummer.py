"""
kummer.py - Confluent hypergeometric (Kummer) function

Phi(a; c; z) = sum (a)_n / ((c)_n n!) z^n, the entire solution of
z w'' + (c - z) w' - a w = 0 with w(0) = 1. Also builds the two normalized
relatives used by the convexity and starlikeness results:

    Lambda(a; c; z) = (Phi(a; c; z) - 1) c / a
    Upsilon(a; c; z) = z Phi(a; c; z)

and an independent quadrature oracle based on the Euler integral.
"""

import logging

import numpy as np
from scipy.special import roots_jacobi

from numerics.complex_math import complex_gamma, finite_complex, is_nonpositive_integer
from numerics.errors import ConvergenceError, DomainError, ParameterError
from numerics.series import (
    MAX_TERMS,
    MIN_DEGREE,
    ratio_series,
    series_derivative,
    series_eval,
    series_eval_many,
    shift_up,
)
from .residuals import polar_grid, residual_report

logger = logging.getLogger(__name__)

# Gauss-Jacobi node counts tried by the quadrature oracle (doubling)
QUADRATURE_START_NODES = 16
QUADRATURE_MAX_NODES = 1024

# the oracle stops when two successive rules agree to this (relative)
QUADRATURE_TOL = 1e-13


def check_kummer_params(a, c):
    """validate (a, c) and return them as complex numbers"""
    a = finite_complex(a, 'a')
    c = finite_complex(c, 'c')
    if is_nonpositive_integer(c):
        raise ParameterError(f"Kummer function undefined for c = {c.real:g}",
                             exclusion="c not in {0, -1, -2, ...}")
    return a, c


def _kummer_ratio(a, c):
    return lambda n: (a + n) / ((c + n) * (n + 1))


def _terminating_degree(a, min_degree):
    # the ratio only vanishes at n = -a, so the build has to get that far
    if is_nonpositive_integer(a):
        return max(min_degree, int(-a.real))
    return min_degree


def kummer_series(a, c, r_ref=1.0, min_degree=MIN_DEGREE, max_terms=MAX_TERMS):
    """
    Taylor series of Phi(a; c; z)

    terminates exactly at degree -a when a is a nonpositive integer
    """
    a, c = check_kummer_params(a, c)
    s = ratio_series(1.0, _kummer_ratio(a, c), r_ref,
                     min_degree=_terminating_degree(a, min_degree), max_terms=max_terms)
    logger.debug(f"kummer_series a={a} c={c}: degree {s.degree}, tail {s.tail_bound:.3g}")
    return s


def kummer_eval(a, c, z):
    """Phi(a; c; z) for |z| <= 1"""
    z = finite_complex(z, 'z')
    return series_eval(kummer_series(a, c), z)


def kummer_lambda_series(a, c, r_ref=1.0, min_degree=MIN_DEGREE, max_terms=MAX_TERMS):
    """
    Lambda(a; c; z) = (Phi(a; c; z) - 1) c / a, a normalized function

    the recurrence starts from the exact linear coefficient 1 so nothing is
    subtracted numerically at the origin
    """
    a, c = check_kummer_params(a, c)
    if a == 0:
        raise ParameterError("Lambda(a; c; z) needs a != 0", exclusion="a != 0")
    return ratio_series(1.0, _kummer_ratio(a, c), r_ref, offset=1,
                        min_degree=_terminating_degree(a, min_degree), max_terms=max_terms)


def kummer_upsilon_series(a, c, r_ref=1.0, min_degree=MIN_DEGREE, max_terms=MAX_TERMS):
    """Upsilon(a; c; z) = z Phi(a; c; z)"""
    return shift_up(kummer_series(a, c, r_ref, min_degree=min_degree, max_terms=max_terms))


def kummer_quadrature_oracle(a, c, z):
    """
    Phi(a; c; z) from the Euler integral

        Gamma(c) / (Gamma(a) Gamma(c - a)) * int_0^1 t^(a-1) (1-t)^(c-a-1) e^(tz) dt

    the real parts of the endpoint exponents go into a Gauss-Jacobi weight,
    whatever is left (e^(tz) and any imaginary exponents) is integrated by
    the rule. node counts double until two rules agree
    """
    a = finite_complex(a, 'a')
    c = finite_complex(c, 'c')
    z = finite_complex(z, 'z')
    if a.real <= 0 or (c - a).real <= 0:
        raise DomainError(f"Euler integral needs Re a > 0 and Re(c - a) > 0, got a={a}, c={c}")

    # weight (1-x)^alpha (1+x)^beta on [-1, 1] with t = (1 + x) / 2
    alpha = (c - a).real - 1.0
    beta = a.real - 1.0
    prefactor = complex_gamma(c) / (complex_gamma(a) * complex_gamma(c - a)) * 2.0 ** -(alpha + beta + 1.0)

    def rule(n):
        x, w = roots_jacobi(n, alpha, beta)
        t = 0.5 * (1.0 + x)
        g = np.exp(1j * a.imag * np.log(t) + 1j * (c - a).imag * np.log1p(-t) + t * z)
        return prefactor * np.sum(w * g)

    n = QUADRATURE_START_NODES
    previous = rule(n)
    while n < QUADRATURE_MAX_NODES:
        n *= 2
        current = rule(n)
        if abs(current - previous) <= QUADRATURE_TOL * max(1.0, abs(current)):
            return complex(current)
        previous = current
    raise ConvergenceError(f"Euler integral for a={a}, c={c}, z={z} did not settle "
                           f"with {QUADRATURE_MAX_NODES} nodes")


def _kummer_residual_for(series, a, c, zs):
    d1 = series_derivative(series)
    d2 = series_derivative(d1)
    phi = series_eval_many(series, zs)
    phi1 = series_eval_many(d1, zs)
    phi2 = series_eval_many(d2, zs)
    return zs * phi2 + (c - zs) * phi1 - a * phi


def kummer_series_residual(series, a, c, region_r):
    """Kummer ODE residual of an arbitrary series, e.g. a deliberately corrupted one"""
    zs = polar_grid(region_r)
    return residual_report(_kummer_residual_for(series, a, c, zs), zs)


def kummer_residual(a, c, region_r):
    """max |z Phi'' + (c - z) Phi' - a Phi| over the polar grid in |z| <= region_r"""
    a, c = check_kummer_params(a, c)
    return kummer_series_residual(kummer_series(a, c), a, c, region_r)


def kummer_contiguous_check(a, c, z):
    """|a Phi(a+1; c+1; z) - c Phi'(a; c; z)|"""
    a, c = check_kummer_params(a, c)
    z = finite_complex(z, 'z')
    left = a * series_eval(kummer_series(a + 1, c + 1), z)
    right = c * series_eval(series_derivative(kummer_series(a, c)), z)
    return abs(left - right)
