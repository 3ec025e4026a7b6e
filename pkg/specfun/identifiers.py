"""
identifiers.py - Named special functions

A SpecialFunctionId is a family name plus its parameters, e.g.
('kummer', a=-1, c=3). FAMILIES lists every family this project knows, the
parameters it takes and whether its series is normalized (c_0 = 0, c_1 = 1)
or raw (c_0 = 1). The id validates its parameters on construction, so
anything that holds one can build the series without further checks.
"""

import logging
from dataclasses import dataclass

from numerics.complex_math import finite_complex
from numerics.errors import ParameterError
from numerics.series import MAX_TERMS, MIN_DEGREE, series_eval
from .bessel import bessel_j_eval
from .kummer import (
    check_kummer_params,
    kummer_lambda_series,
    kummer_series,
    kummer_upsilon_series,
)
from .lommel import check_lommel_params, lommel_alexander_series, lommel_series
from .struve import (
    check_struve_params,
    modified_struve_L_eval,
    struve_chi_series,
    struve_H_eval,
    struve_normalized_series,
    struve_u_series,
)

logger = logging.getLogger(__name__)

RAW = 'raw'
NORMALIZED = 'normalized'


def _check_lambda(a, c):
    a, c = check_kummer_params(a, c)
    if a == 0:
        raise ParameterError("Lambda(a; c; z) needs a != 0", exclusion="a != 0")


def _check_chi(kappa, c):
    kappa, c = check_struve_params(kappa, c)
    if c == 0:
        raise ParameterError("6 kappa (1 - u) / c needs c != 0", exclusion="c != 0")


def _check_struve_order(nu):
    check_struve_params(finite_complex(nu, 'nu') + 1.5, 1.0)


def _check_bessel_order(nu):
    nu = finite_complex(nu, 'nu')
    if nu.imag == 0 and nu.real <= -1 and nu.real == int(nu.real):
        raise ParameterError(f"series form of J_nu undefined for nu = {nu.real:g}",
                             exclusion="nu + 1 not in {0, -1, -2, ...}")


# every family: parameter names, series kind, title, validator,
# series builder (None when the function is not a power series about 0)
# and an optional direct evaluator
FAMILIES = {
    'kummer': {
        'params': ('a', 'c'),
        'kind': RAW,
        'title': "Kummer function Phi(a; c; z)",
        'check': check_kummer_params,
        'series': kummer_series,
        'eval': None,
    },
    'kummer-lambda': {
        'params': ('a', 'c'),
        'kind': NORMALIZED,
        'title': "Lambda(a; c; z) = (Phi(a; c; z) - 1) c / a",
        'check': _check_lambda,
        'series': kummer_lambda_series,
        'eval': None,
    },
    'kummer-upsilon': {
        'params': ('a', 'c'),
        'kind': NORMALIZED,
        'title': "Upsilon(a; c; z) = z Phi(a; c; z)",
        'check': check_kummer_params,
        'series': kummer_upsilon_series,
        'eval': None,
    },
    'lommel': {
        'params': ('mu', 'nu'),
        'kind': NORMALIZED,
        'title': "normalized Lommel function h_{mu,nu}(z)",
        'check': check_lommel_params,
        'series': lommel_series,
        'eval': None,
    },
    'lommel-alexander': {
        'params': ('mu', 'nu'),
        'kind': NORMALIZED,
        'title': "Alexander transform f_{mu,nu}(z) of h_{mu,nu}",
        'check': check_lommel_params,
        'series': lommel_alexander_series,
        'eval': None,
    },
    'struve-u': {
        'params': ('kappa', 'c'),
        'kind': RAW,
        'title': "normalized generalized Struve function u(z)",
        'check': check_struve_params,
        'series': struve_u_series,
        'eval': None,
    },
    'struve-chi': {
        'params': ('kappa', 'c'),
        'kind': NORMALIZED,
        'title': "chi(z) = 6 kappa (1 - u(z)) / c",
        'check': _check_chi,
        'series': struve_chi_series,
        'eval': None,
    },
    'struve-h': {
        'params': ('nu',),
        'kind': RAW,
        'title': "Struve H_nu (eval) / normalized H_nu as a series in z",
        'check': _check_struve_order,
        'series': lambda nu, **opts: struve_normalized_series(nu, 1.0, **opts),
        'eval': struve_H_eval,
    },
    'struve-l': {
        'params': ('nu',),
        'kind': RAW,
        'title': "modified Struve L_nu (eval) / normalized L_nu as a series in z",
        'check': _check_struve_order,
        'series': lambda nu, **opts: struve_normalized_series(nu, -1.0, **opts),
        'eval': modified_struve_L_eval,
    },
    'bessel-j': {
        'params': ('nu',),
        'kind': RAW,
        'title': "Bessel function J_nu(z)",
        'check': _check_bessel_order,
        'series': None,
        'eval': bessel_j_eval,
    },
}


@dataclass(frozen=True)
class SpecialFunctionId:
    """
    one function of a known family with concrete parameters

    `params` is a tuple of (name, complex value) pairs in the family's
    declared order; use SpecialFunctionId.create(family, **params)
    """
    family: str
    params: tuple

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown function family {self.family!r}",
                                 exclusion=f"family in {sorted(FAMILIES)}")
        expected = FAMILIES[self.family]['params']
        names = tuple(name for name, _ in self.params)
        if names != expected:
            raise ParameterError(f"{self.family} takes parameters {expected}, got {names}",
                                 exclusion="parameter names")
        FAMILIES[self.family]['check'](*self.values)

    @classmethod
    def create(cls, family, **params):
        spec = FAMILIES.get(family)
        if spec is None:
            raise ParameterError(f"unknown function family {family!r}",
                                 exclusion=f"family in {sorted(FAMILIES)}")
        missing = [name for name in spec['params'] if name not in params]
        if missing:
            raise ParameterError(f"{family} is missing parameter(s) {missing}",
                                 exclusion="parameter names")
        extra = sorted(set(params) - set(spec['params']))
        if extra:
            raise ParameterError(f"{family} does not take parameter(s) {extra}",
                                 exclusion="parameter names")
        return cls(family, tuple((name, finite_complex(params[name], name)) for name in spec['params']))

    @property
    def values(self):
        return tuple(value for _, value in self.params)

    @property
    def kind(self):
        return FAMILIES[self.family]['kind']

    @property
    def title(self):
        return FAMILIES[self.family]['title']

    @property
    def has_series(self):
        return FAMILIES[self.family]['series'] is not None

    def build_series(self, r_ref=1.0, min_degree=MIN_DEGREE, max_terms=MAX_TERMS):
        builder = FAMILIES[self.family]['series']
        if builder is None:
            raise ParameterError(f"{self.family} has no power series about 0 in this project",
                                 exclusion="family with a series")
        return builder(*self.values, r_ref=r_ref, min_degree=min_degree, max_terms=max_terms)

    def evaluate(self, z):
        """value at z: the family's own evaluator if it has one, else the series"""
        evaluator = FAMILIES[self.family]['eval']
        if evaluator is not None:
            return evaluator(*self.values, z)
        return series_eval(self.build_series(), z)

    def to_dict(self):
        return {
            'family': self.family,
            'params': {name: _complex_dict(value) for name, value in self.params},
        }


def _complex_dict(value):
    return {'re': value.real, 'im': value.imag}
