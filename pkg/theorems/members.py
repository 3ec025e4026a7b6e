"""
members.py - The functions each result claims to lie in a class

claimed_member(theorem_id, params) returns one ClaimedMember per stated
membership. Every series is built exactly as the family module builds it:
normalizations come from the coefficient recurrences, never from
subtracting values at the origin.
"""

import logging
from dataclasses import dataclass

from geometry.certifier import KE, PE, SE_STAR
from geometry.maps import AnalyticMap, alexander, hadamard, libera
from numerics.errors import ParameterError
from numerics.series import PowerSeries, scale, series_derivative, shift_up
from specfun.kummer import kummer_lambda_series, kummer_series, kummer_upsilon_series
from specfun.lommel import lommel_alexander_series, lommel_series
from specfun.struve import struve_chi_series, struve_u_series
from .hypotheses import normalize_params

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClaimedMember:
    """a function, the class it is claimed to belong to, and a readable name"""
    label: str
    function: AnalyticMap
    cls: str


def struve_recursion_member(kappa, c):
    """
    (2 kappa / c z)(1 - 2 z u'(z) - u(z)) as a series

    coefficient m is -(2m + 3) u_{m+1} 2 kappa / c, which the recursion
    u + 2 z u' + (c z / 2 kappa) u_{kappa+1} = 1 says is u_{kappa+1}
    """
    if c == 0:
        raise ParameterError("(2 kappa / c z)(1 - 2 z u' - u) needs c != 0", exclusion="c != 0")
    u = struve_u_series(kappa, c)
    m = len(u) - 1
    coeffs = [-(2 * k + 3) * u[k + 1] * 2 * kappa / c for k in range(m)] or [0j]
    return PowerSeries(coeffs, u.tail_bound * abs(2 * kappa / c) * (2 * m + 3), u.r_ref, u.tail_kind)


def _z_derivative(f):
    """z f'(z) of a normalized map, again normalized"""
    return AnalyticMap.normalized(shift_up(series_derivative(f.series)))


def _struve_order_members(nu, c, name):
    chi = AnalyticMap.normalized(struve_chi_series(nu + 1.5, c))
    return (
        ClaimedMember(f"{name}: 6 kappa (1 - u)/c with kappa = nu + 3/2", chi, KE),
        ClaimedMember(f"{name}: z times its derivative", _z_derivative(chi), SE_STAR),
    )


def _members_for(theorem_id, p, f_convex):
    if theorem_id == 'CH_P':
        return (ClaimedMember("Phi(a; c; z)", AnalyticMap.raw(kummer_series(p['a'], p['c'])), PE),)
    if theorem_id == 'CH_PDERIV':
        a, c = p['a'], p['c']
        series = scale(series_derivative(kummer_series(a, c)), c / a)
        return (ClaimedMember("(c/a) Phi'(a; c; z)", AnalyticMap.raw(series), PE),)
    if theorem_id == 'CH_K':
        return (ClaimedMember("Lambda(a; c; z)", AnalyticMap.normalized(kummer_lambda_series(p['a'], p['c'])), KE),)
    if theorem_id == 'CH_S':
        return (ClaimedMember("z Phi(a; c; z)", AnalyticMap.normalized(kummer_upsilon_series(p['a'], p['c'])), SE_STAR),)
    if theorem_id == 'CH_GDELTA':
        series = kummer_lambda_series(1.0, 1.0 + p['delta'])
        return (ClaimedMember("g_delta = Lambda(1; 1 + delta; z)", AnalyticMap.normalized(series), KE),)
    if theorem_id == 'CH_HDELTA':
        series = kummer_upsilon_series(1.0, 1.0 + p['delta'])
        return (ClaimedMember("h_delta = z Phi(1; 1 + delta; z)", AnalyticMap.normalized(series), SE_STAR),)
    if theorem_id == 'LOM_K':
        return (ClaimedMember("h_{mu,nu}", AnalyticMap.normalized(lommel_series(p['mu'], p['nu'])), KE),)
    if theorem_id == 'LOM_ALEX':
        return (
            ClaimedMember("f_{mu,nu}", AnalyticMap.normalized(lommel_alexander_series(p['mu'], p['nu'])), KE),
            ClaimedMember("h_{mu,nu}", AnalyticMap.normalized(lommel_series(p['mu'], p['nu'])), SE_STAR),
        )
    if theorem_id == 'LOM_P':
        h = lommel_series(p['mu'], p['nu'])
        series = PowerSeries(h.coeffs[1:], h.tail_bound / h.r_ref, h.r_ref, h.tail_kind)
        return (ClaimedMember("h_{mu,nu}(z)/z", AnalyticMap.raw(series), PE),)
    if theorem_id == 'STR_P':
        return (ClaimedMember("u", AnalyticMap.raw(struve_u_series(p['kappa'], p['c'])), PE),)
    if theorem_id == 'STR_P_REC':
        series = struve_recursion_member(p['kappa'], p['c'])
        return (ClaimedMember("(2 kappa / c z)(1 - 2 z u' - u)", AnalyticMap.raw(series), PE),)
    if theorem_id == 'STR_K':
        chi = AnalyticMap.normalized(struve_chi_series(p['kappa'].real, p['c']))
        return (ClaimedMember("6 kappa (1 - u)/c", chi, KE),)
    if theorem_id == 'STR_H':
        return _struve_order_members(p['nu'].real, 1.0, "normalized H_nu")
    if theorem_id == 'STR_L':
        return _struve_order_members(p['nu'].real, -1.0, "normalized L_nu")
    if theorem_id == 'STR_CONV':
        chi = AnalyticMap.normalized(struve_chi_series(p['kappa'].real, p['c']))
        members = []
        if f_convex is not None:
            members.append(ClaimedMember("chi * f", hadamard(chi, f_convex), KE))
        members.append(ClaimedMember("A[chi]", alexander(chi), KE))
        members.append(ClaimedMember("L[chi]", libera(chi), KE))
        return tuple(members)
    raise KeyError(theorem_id)


def claimed_member(theorem_id, params, f_convex=None):
    """
    the claimed members of a result at concrete parameters

    returns a tuple of ClaimedMember; LOM_ALEX, STR_H and STR_L claim two
    memberships, STR_CONV two or three (f_convex adds chi * f)
    """
    params = normalize_params(theorem_id, params)
    members = _members_for(theorem_id, params, f_convex)
    logger.debug(f"{theorem_id}: {len(members)} claimed member(s)")
    return members
