"""
bessel.py - Bessel function of the first kind

J_nu(z) = sum_{n>=0} (-1)^n / (n! Gamma(nu + n + 1)) (z/2)^(2n + nu)

Only used as an oracle for the Lommel function (h_{1,0}(z) = 4 - 4 J_0(sqrt z))
and by `main.py eval bessel-j`, so it works for any finite z, not just the
unit disk.
"""

from numerics.complex_math import complex_gamma, finite_complex, is_nonpositive_integer, principal_power
from numerics.errors import ParameterError
from numerics.series import ratio_sum


def bessel_j_eval(nu, z):
    """J_nu(z); non-integer nu refuses z on (-inf, 0]"""
    nu = finite_complex(nu, 'nu')
    z = finite_complex(z, 'z')
    if is_nonpositive_integer(nu + 1):
        raise ParameterError(f"series form of J_nu undefined for nu = {nu.real:g}",
                             exclusion="nu + 1 not in {0, -1, -2, ...}")
    prefactor = principal_power(z / 2, nu) / complex_gamma(nu + 1)
    return prefactor * ratio_sum(1.0, lambda n: -0.25 / ((n + 1) * (nu + n + 1)), z * z)
