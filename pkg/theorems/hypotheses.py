"""
hypotheses.py - Hypothesis checkers for the exponential-class results

Each checker turns a parameter set into a list of Conditions. A condition
carries its slack: the satisfied side minus the threshold side, so a
non-strict inequality holds when slack >= 0 and a strict one when slack > 0.

All composite constants are built from math.e and math.sin(1) when a check
runs; none of them is written down as a decimal.
"""

import math
import logging
from dataclasses import dataclass, field

from numerics.complex_math import finite_complex, is_nonpositive_integer
from numerics.errors import ParameterError
from specfun.kummer import check_kummer_params
from specfun.lommel import check_lommel_params, lommel_m_n
from specfun.struve import check_struve_params
from .registry import THEOREMS

logger = logging.getLogger(__name__)

E = math.e


def sin1():
    return math.sin(1.0)


def kummer_convex_bound():
    """(e-1)^2 (e+1) / e^2"""
    return (E - 1) ** 2 * (E + 1) / E ** 2


def gdelta_bound():
    """(e^3 - 2e^2 - e + 1) / (e^2 (e-1))"""
    return (E ** 3 - 2 * E ** 2 - E + 1) / (E ** 2 * (E - 1))


def hdelta_bound():
    """(e^2 - 1) / e^2"""
    return (E ** 2 - 1) / E ** 2


def lommel_convex_bound():
    """e^4 - 3e^3 + 13e^2/4 - 3e/4 - 3/e + 2 - 2 sin 1"""
    return E ** 4 - 3 * E ** 3 + 13 * E ** 2 / 4 - 3 * E / 4 - 3 / E + 2 - 2 * sin1()


def lommel_alexander_bound():
    """e^3 - e^2 + 13e/4 - 4"""
    return E ** 3 - E ** 2 + 13 * E / 4 - 4


def struve_convex_constant():
    """4(e-1)^3 + 6(e-1)^2 + 6/e - 12/e^2, the c-free part of the Struve convexity bound"""
    return 4 * (E - 1) ** 3 + 6 * (E - 1) ** 2 + 6 / E - 12 / E ** 2


def struve_convex_rhs(c):
    """(e+1)|c| + 4(e-1)^3 + 6(e-1)^2 + 6/e - 12/e^2"""
    return (E + 1) * abs(c) + struve_convex_constant()


def struve_order_threshold():
    """smallest nu allowed for the normalized Struve H / L convexity result"""
    return E / (8 * sin1() + 6 - 2 * E) * (struve_convex_constant() + (E + 1)) - 1.5


@dataclass(frozen=True)
class Condition:
    """one inequality of a hypothesis"""
    label: str
    satisfied: bool
    slack: float
    strict: bool = False

    def to_dict(self):
        return {'label': self.label, 'satisfied': self.satisfied, 'slack': self.slack, 'strict': self.strict}


def at_least(label, lhs, rhs):
    """lhs >= rhs"""
    slack = float(lhs - rhs)
    return Condition(label, slack >= 0, slack, strict=False)


def at_most(label, lhs, rhs):
    """lhs <= rhs"""
    slack = float(rhs - lhs)
    return Condition(label, slack >= 0, slack, strict=False)


def greater(label, lhs, rhs):
    """lhs > rhs"""
    slack = float(lhs - rhs)
    return Condition(label, slack > 0, slack, strict=True)


@dataclass(frozen=True)
class HypothesisReport:
    """all conditions of one theorem evaluated at concrete parameters"""
    theorem: str
    params: dict
    conditions: tuple
    notes: tuple = field(default=())

    @property
    def all_satisfied(self):
        return all(cond.satisfied for cond in self.conditions)

    def to_dict(self):
        return {
            'theorem': self.theorem,
            'params': {name: {'re': v.real, 'im': v.imag} for name, v in self.params.items()},
            'conditions': [cond.to_dict() for cond in self.conditions],
            'all_satisfied': self.all_satisfied,
            'notes': list(self.notes),
        }


def _real(params, name, theorem_id):
    value = params[name]
    if value.imag != 0:
        raise ParameterError(f"{theorem_id} needs a real {name}, got {value}", exclusion=f"{name} real")
    return value.real


def _positive_integer_note(name, value, notes):
    if value.imag == 0 and value.real > 0 and value.real == math.floor(value.real):
        notes.append(f"{name} = {value.real:g} is a positive integer; the stated hypothesis reads "
                     f"'not a nonnegative integer' but only 0, -1, -2, ... are excluded here")


def _kummer_case_notes(c, case_one, notes):
    _positive_integer_note('c', complex(c), notes)
    if case_one and c < 0 and not is_nonpositive_integer(c):
        notes.append(f"c = {c:g} is a negative non-integer under case (i); "
                     "the two readings of the c exclusion disagree here")


def _check_ch_p(p, notes):
    a, c = check_kummer_params(p['a'], p['c'])
    _positive_integer_note('c', c, notes)
    return [at_least("Re c >= |a| + 2", c.real, abs(a) + 2)]


def _check_ch_pderiv(p, notes):
    a, c = check_kummer_params(p['a'], p['c'])
    if a == 0:
        raise ParameterError("(c/a) Phi'(a; c; z) needs a != 0", exclusion="a != 0")
    _positive_integer_note('c', c, notes)
    return [at_least("Re c >= |a + 1| + 1", c.real, abs(a + 1) + 1)]


def _check_ch_k(p, notes):
    a, c = _real(p, 'a', 'CH_K'), _real(p, 'c', 'CH_K')
    check_kummer_params(a, c)
    if a == 0:
        raise ParameterError("(Phi - 1) c / a needs a != 0", exclusion="a != 0")
    if a > -1:
        case = at_least("case (i) a > -1: c >= a", c, a)
    else:
        case = at_least("case (ii) a <= -1: c >= sqrt(1 + (1 + a)^2)", c, math.sqrt(1 + (1 + a) ** 2))
    _kummer_case_notes(c, a > -1, notes)
    bound = at_most("(e-1)|c-2| + |a| <= (e-1)^2 (e+1) / e^2",
                    (E - 1) * abs(c - 2) + abs(a), kummer_convex_bound())
    return [case, bound]


def _check_ch_s(p, notes):
    a, c = _real(p, 'a', 'CH_S'), _real(p, 'c', 'CH_S')
    check_kummer_params(a, c)
    if a > 0:
        case = at_least("case (i) a > 0: c >= a", c, a)
    else:
        case = at_least("case (ii) a <= 0: c >= 1 + sqrt(1 + a^2)", c, 1 + math.sqrt(1 + a ** 2))
    _kummer_case_notes(c, a > 0, notes)
    bound = at_most("(e-1)|c-3| + |a-1| <= (e-1)^2 (e+1) / e^2",
                    (E - 1) * abs(c - 3) + abs(a - 1), kummer_convex_bound())
    return [case, bound]


def _check_delta(p, notes, center, radius, label):
    delta = _real(p, 'delta', 'delta family')
    check_kummer_params(1.0, 1.0 + delta)
    _positive_integer_note('c = 1 + delta', complex(1.0 + delta), notes)
    return [
        at_least("c >= a, i.e. delta >= 0", delta, 0.0),
        at_most(label, abs(delta - center), radius),
    ]


def _check_ch_gdelta(p, notes):
    return _check_delta(p, notes, 1.0, gdelta_bound(), "|delta - 1| <= (e^3 - 2e^2 - e + 1) / (e^2 (e-1))")


def _check_ch_hdelta(p, notes):
    return _check_delta(p, notes, 2.0, hdelta_bound(), "|delta - 2| <= (e^2 - 1) / e^2")


def _check_lom_k(p, notes):
    mu, nu = _real(p, 'mu', 'LOM_K'), _real(p, 'nu', 'LOM_K')
    check_lommel_params(mu, nu)
    m, n = lommel_m_n(mu, nu)
    if n == 0:
        ratio = Condition("4M/N < 2M - 3", False, -math.inf, strict=True)
    else:
        ratio = greater("4M/N < 2M - 3", 2 * m - 3, 4 * m / n)
    lhs = mu * (1 + 2 * sin1()) - 0.25 * E * (E - 1) * abs((mu + 1) * (mu - 7) - nu ** 2)
    return [
        greater("mu > -5 + sqrt(3/2 + nu^2)", mu, -5 + math.sqrt(1.5 + nu ** 2)),
        ratio,
        at_least("mu(1 + 2 sin 1) - e(e-1)/4 |(mu+1)(mu-7) - nu^2| >= "
                 "e^4 - 3e^3 + 13e^2/4 - 3e/4 - 3/e + 2 - 2 sin 1", lhs, lommel_convex_bound()),
    ]


def _check_lom_alex(p, notes):
    mu, nu = _real(p, 'mu', 'LOM_ALEX'), _real(p, 'nu', 'LOM_ALEX')
    check_lommel_params(mu, nu)
    lhs = mu * (2 * E - 1) - 0.25 * E * (E - 1) * abs((mu - 1) ** 2 - nu ** 2)
    return [
        at_least("(mu+1)((mu+1)(mu+3) - nu^2) >= 1/8", (mu + 1) * ((mu + 1) * (mu + 3) - nu ** 2), 0.125),
        at_least("mu(2e - 1) - e(e-1)/4 |(mu-1)^2 - nu^2| >= e^3 - e^2 + 13e/4 - 4",
                 lhs, lommel_alexander_bound()),
    ]


def _check_lom_p(p, notes):
    mu, nu = check_lommel_params(p['mu'], p['nu'])
    return [at_least("4 Re mu >= (e-1)|(mu+1)^2 - nu^2| - 3",
                     4 * mu.real, (E - 1) * abs((mu + 1) ** 2 - nu ** 2) - 3)]


def _check_str_p(p, notes):
    kappa, c = check_struve_params(p['kappa'], p['c'])
    _positive_integer_note('kappa', kappa, notes)
    return [at_least("Re kappa - (e-1)/2 |kappa - 1| >= |c|/4 + 1/2",
                     kappa.real - 0.5 * (E - 1) * abs(kappa - 1), abs(c) / 4 + 0.5)]


def _check_str_p_rec(p, notes):
    kappa, c = check_struve_params(p['kappa'], p['c'])
    if c == 0:
        raise ParameterError("(2 kappa / c z)(1 - 2 z u' - u) needs c != 0", exclusion="c != 0")
    _positive_integer_note('kappa', kappa, notes)
    return [at_least("Re(kappa + 1) - (e-1)/2 |kappa| >= |c|/4 + 1/2",
                     (kappa + 1).real - 0.5 * (E - 1) * abs(kappa), abs(c) / 4 + 0.5)]


def _struve_convex_condition(kappa, c):
    return at_least("(2 kappa / e)(4 sin 1 + 3 - e) >= (e+1)|c| + 4(e-1)^3 + 6(e-1)^2 + 6/e - 12/e^2",
                    2 * kappa / E * (4 * sin1() + 3 - E), struve_convex_rhs(c))


def _check_str_k(p, notes):
    kappa = _real(p, 'kappa', 'STR_K')
    kappa, c = check_struve_params(kappa, p['c'])
    if c == 0:
        raise ParameterError("6 kappa (1 - u) / c needs c != 0", exclusion="c != 0")
    _positive_integer_note('kappa', kappa, notes)
    return [_struve_convex_condition(kappa.real, c)]


def _check_str_order(p, notes):
    nu = _real(p, 'nu', 'STR_H/STR_L')
    check_struve_params(nu + 1.5, 1.0)
    _positive_integer_note('nu + 3/2', complex(nu + 1.5), notes)
    return [at_least("nu >= e / (8 sin 1 + 6 - 2e) [4(e-1)^3 + 6(e-1)^2 + (e+1) + 6/e - 12/e^2] - 3/2",
                     nu, struve_order_threshold())]


CHECKERS = {
    'CH_P': _check_ch_p,
    'CH_PDERIV': _check_ch_pderiv,
    'CH_K': _check_ch_k,
    'CH_S': _check_ch_s,
    'CH_GDELTA': _check_ch_gdelta,
    'CH_HDELTA': _check_ch_hdelta,
    'LOM_K': _check_lom_k,
    'LOM_ALEX': _check_lom_alex,
    'LOM_P': _check_lom_p,
    'STR_P': _check_str_p,
    'STR_P_REC': _check_str_p_rec,
    'STR_K': _check_str_k,
    'STR_H': _check_str_order,
    'STR_L': _check_str_order,
    'STR_CONV': _check_str_k,
}


def normalize_params(theorem_id, params):
    """look up the theorem and coerce its parameters to complex, in declared order"""
    if theorem_id not in THEOREMS:
        raise ParameterError(f"unknown theorem {theorem_id!r}", exclusion=f"theorem in {sorted(THEOREMS)}")
    names = THEOREMS[theorem_id]['params']
    missing = [name for name in names if name not in params]
    if missing:
        raise ParameterError(f"{theorem_id} is missing parameter(s) {missing}", exclusion="parameter names")
    extra = sorted(set(params) - set(names))
    if extra:
        raise ParameterError(f"{theorem_id} does not take parameter(s) {extra}", exclusion="parameter names")
    return {name: finite_complex(params[name], name) for name in names}


def check_hypothesis(theorem_id, params):
    """evaluate every stated condition of a theorem at the given parameters"""
    params = normalize_params(theorem_id, params)
    notes = []
    conditions = CHECKERS[theorem_id](params, notes)
    report = HypothesisReport(theorem_id, params, tuple(conditions), tuple(notes))
    logger.info(f"{theorem_id} hypothesis {'holds' if report.all_satisfied else 'fails'}: "
                + ", ".join(f"{cond.label} (slack {cond.slack:.6g})" for cond in conditions))
    for note in notes:
        logger.info(f"{theorem_id}: {note}")
    return report
