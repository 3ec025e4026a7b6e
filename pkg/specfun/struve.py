"""
struve.py - Generalized Struve function of the first kind

The normalized generalized Struve function

    u(z) = sum_{n>=0} (-c/4)^n / ((3/2)_n (kappa)_n) z^n,   kappa = nu + (b+2)/2

solves 4 z^2 u'' + 2(2 kappa + 1) z u' + (c z + 2(kappa - 1)) u = 2(kappa - 1).
With b = 1 it covers the classical Struve H_nu (c = 1) and the modified
Struve L_nu (c = -1):

    H_nu(z) = (z/2)^(nu+1) / (Gamma(3/2) Gamma(nu + 3/2)) * u_{c=1}(z^2)
    L_nu(z) = (z/2)^(nu+1) / (Gamma(3/2) Gamma(nu + 3/2)) * u_{c=-1}(z^2)

H and L are summed from their own series here; the normalized forms are
compared against them in the tests.
"""

import math
import logging

from numerics.complex_math import (
    complex_gamma,
    finite_complex,
    is_nonpositive_integer,
    principal_power,
)
from numerics.errors import DomainError, ParameterError
from numerics.series import (
    MAX_TERMS,
    MIN_DEGREE,
    ratio_series,
    ratio_sum,
    series_derivative,
    series_eval,
    series_eval_many,
    spread_even,
)
from .residuals import polar_grid, residual_report

logger = logging.getLogger(__name__)

# Gamma(3/2) = sqrt(pi) / 2
GAMMA_THREE_HALVES = math.sqrt(math.pi) / 2.0


def check_struve_params(kappa, c):
    """validate (kappa, c); kappa must not be a nonpositive integer"""
    kappa = finite_complex(kappa, 'kappa')
    c = finite_complex(c, 'c')
    if is_nonpositive_integer(kappa):
        raise ParameterError(f"generalized Struve function undefined for kappa = {kappa.real:g}",
                             exclusion="kappa not in {0, -1, -2, ...}")
    return kappa, c


def _struve_ratio(kappa, c):
    return lambda n: (-c / 4) / ((1.5 + n) * (kappa + n))


def struve_u_series(kappa, c, r_ref=1.0, min_degree=MIN_DEGREE, max_terms=MAX_TERMS):
    """Taylor series of u; c = 0 gives the constant 1"""
    kappa, c = check_struve_params(kappa, c)
    s = ratio_series(1.0, _struve_ratio(kappa, c), r_ref, min_degree=min_degree, max_terms=max_terms)
    logger.debug(f"struve_u_series kappa={kappa} c={c}: degree {s.degree}")
    return s


def struve_chi_series(kappa, c, r_ref=1.0, min_degree=MIN_DEGREE, max_terms=MAX_TERMS):
    """
    chi(z) = 6 kappa (1 - u(z)) / c, a normalized function

    started from the exact linear coefficient 1; coefficient n >= 1 is
    -6 kappa u_n / c
    """
    kappa, c = check_struve_params(kappa, c)
    if c == 0:
        raise ParameterError("6 kappa (1 - u) / c needs c != 0", exclusion="c != 0")
    return ratio_series(1.0, _struve_ratio(kappa, c), r_ref, offset=1,
                        min_degree=min_degree, max_terms=max_terms)


def struve_normalized_series(nu, c=1.0, r_ref=1.0, min_degree=MIN_DEGREE, max_terms=MAX_TERMS):
    """
    normalized Struve function as a series in z: u(z^2) with kappa = nu + 3/2

    c = 1 gives the normalized H_nu, c = -1 the normalized L_nu
    """
    nu = finite_complex(nu, 'nu')
    return spread_even(struve_u_series(nu + 1.5, c, r_ref ** 2, min_degree=min_degree, max_terms=max_terms))


def _struve_residual_for(series, kappa, c, zs):
    d1 = series_derivative(series)
    d2 = series_derivative(d1)
    u = series_eval_many(series, zs)
    u1 = series_eval_many(d1, zs)
    u2 = series_eval_many(d2, zs)
    lhs = 4 * zs ** 2 * u2 + 2 * (2 * kappa + 1) * zs * u1 + (c * zs + 2 * (kappa - 1)) * u
    return lhs - 2 * (kappa - 1)


def struve_u_residual(kappa, c, region_r):
    """max of the generalized Struve ODE residual over the polar grid"""
    kappa, c = check_struve_params(kappa, c)
    zs = polar_grid(region_r)
    return residual_report(_struve_residual_for(struve_u_series(kappa, c), kappa, c, zs), zs)


def struve_recursion_check(kappa, c, z):
    """|u_kappa(z) + 2 z u_kappa'(z) + (c z / 2 kappa) u_{kappa+1}(z) - 1|"""
    kappa, c = check_struve_params(kappa, c)
    z = finite_complex(z, 'z')
    u = struve_u_series(kappa, c)
    shifted = struve_u_series(kappa + 1, c)
    value = (series_eval(u, z) + 2 * z * series_eval(series_derivative(u), z)
             + (c * z / (2 * kappa)) * series_eval(shifted, z))
    return abs(value - 1)


def _struve_sum(nu, z, c):
    nu = finite_complex(nu, 'nu')
    z = finite_complex(z, 'z')
    if z.imag == 0 and z.real <= 0:
        raise DomainError(f"Struve functions are evaluated off the cut (-inf, 0], got z = {z.real:g}")
    kappa = nu + 1.5
    if is_nonpositive_integer(kappa):
        raise ParameterError(f"Struve function undefined for nu = {nu.real:g}",
                             exclusion="nu + 3/2 not in {0, -1, -2, ...}")
    prefactor = principal_power(z / 2, nu + 1) / (GAMMA_THREE_HALVES * complex_gamma(kappa))
    return prefactor * ratio_sum(1.0, _struve_ratio(kappa, c), z * z)


def struve_H_eval(nu, z):
    """Struve function H_nu(z), principal branch of (z/2)^(nu+1)"""
    return _struve_sum(nu, z, 1.0)


def modified_struve_L_eval(nu, z):
    """modified Struve function L_nu(z), principal branch of (z/2)^(nu+1)"""
    return _struve_sum(nu, z, -1.0)


def struve_normalized_from_H(nu, z):
    """2^nu sqrt(pi) Gamma(nu + 3/2) z^-(nu+1) H_nu(z), with the value 1 at z = 0"""
    nu = finite_complex(nu, 'nu')
    z = finite_complex(z, 'z')
    if z == 0:
        return complex(1.0)
    scale = 2 ** nu * math.sqrt(math.pi) * complex_gamma(nu + 1.5) / principal_power(z, nu + 1)
    return scale * struve_H_eval(nu, z)
