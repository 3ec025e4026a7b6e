"""
lommel.py - Normalized Lommel function of the first kind

h_{mu,nu}(z) = z + sum_{n>=1} (-1/4)^n / ((alpha)_n (beta)_n) z^(n+1)

with alpha = (mu - nu + 3)/2 and beta = (mu + nu + 3)/2. It solves

    z^2 h'' + mu z h' + 1/4 ((mu-1)^2 - nu^2 + z) h = 1/4 ((mu+1)^2 - nu^2) z

For (mu, nu) = (1, 0) it is 4 - 4 J_0(sqrt z).
"""

import logging

import numpy as np

from numerics.complex_math import finite_complex
from numerics.errors import ParameterError
from numerics.series import (
    MAX_TERMS,
    MIN_DEGREE,
    PowerSeries,
    ratio_series,
    series_derivative,
    series_eval_many,
)
from .residuals import polar_grid, residual_report

logger = logging.getLogger(__name__)


def _is_negative_odd_integer(value):
    return value.imag == 0 and value.real < 0 and value.real == int(value.real) and int(value.real) % 2 == 1


def check_lommel_params(mu, nu):
    """validate (mu, nu); mu + nu and mu - nu must not be negative odd integers"""
    mu = finite_complex(mu, 'mu')
    nu = finite_complex(nu, 'nu')
    for label, value in (('mu - nu', mu - nu), ('mu + nu', mu + nu)):
        if _is_negative_odd_integer(value):
            raise ParameterError(f"Lommel function undefined: {label} = {value.real:g}",
                                 exclusion="mu +/- nu not a negative odd integer")
    return mu, nu


def lommel_m_n(mu, nu):
    """the derived constants M = (mu+5)^2 - nu^2 and N = (mu+3)^2 - nu^2"""
    mu, nu = check_lommel_params(mu, nu)
    m = (mu + 5) ** 2 - nu ** 2
    n = (mu + 3) ** 2 - nu ** 2
    if mu.imag == 0 and nu.imag == 0:
        return m.real, n.real
    return m, n


def lommel_series(mu, nu, r_ref=1.0, min_degree=MIN_DEGREE, max_terms=MAX_TERMS):
    """Taylor series of h_{mu,nu}, normalized so c_0 = 0 and c_1 = 1"""
    mu, nu = check_lommel_params(mu, nu)
    alpha = (mu - nu + 3) / 2
    beta = (mu + nu + 3) / 2
    # c_{k+1} / c_k for k >= 1
    s = ratio_series(1.0, lambda k: -0.25 / ((alpha + k - 1) * (beta + k - 1)), r_ref, offset=1,
                     min_degree=min_degree, max_terms=max_terms)
    logger.debug(f"lommel_series mu={mu} nu={nu}: degree {s.degree}")
    return s


def lommel_alexander_series(mu, nu, r_ref=1.0, min_degree=MIN_DEGREE, max_terms=MAX_TERMS):
    """f_{mu,nu}(z) = int_0^z h_{mu,nu}(t)/t dt, coefficient k is h_k / k"""
    h = lommel_series(mu, nu, r_ref, min_degree=min_degree, max_terms=max_terms)
    coeffs = h.padded(len(h))
    coeffs[1:] /= np.arange(1, len(h))
    return PowerSeries(coeffs, h.tail_bound, h.r_ref, h.tail_kind)


def _lommel_residual_for(series, mu, nu, zs):
    d1 = series_derivative(series)
    d2 = series_derivative(d1)
    h = series_eval_many(series, zs)
    h1 = series_eval_many(d1, zs)
    h2 = series_eval_many(d2, zs)
    lhs = zs ** 2 * h2 + mu * zs * h1 + 0.25 * ((mu - 1) ** 2 - nu ** 2 + zs) * h
    return lhs - 0.25 * ((mu + 1) ** 2 - nu ** 2) * zs


def lommel_residual(mu, nu, region_r):
    """max of the Lommel ODE residual over the polar grid in |z| <= region_r"""
    mu, nu = check_lommel_params(mu, nu)
    zs = polar_grid(region_r)
    return residual_report(_lommel_residual_for(lommel_series(mu, nu), mu, nu, zs), zs)
