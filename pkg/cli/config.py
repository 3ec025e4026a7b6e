"""
config.py - Run configuration built from the command line

A RunConfig is everything one command needs: which function or theorem,
its parameters (already checked against the family exclusions), the sampling
plan and where the output goes. Numbers on the command line are complex
pairs written `re,im`; a bare `re` means a real value.
"""

import logging
from dataclasses import dataclass, field

from geometry.certifier import KE, PE, SE_STAR, SamplingPlan
from geometry.maps import NORMALIZED, RAW, AnalyticMap
from numerics.complex_math import finite_complex
from numerics.errors import ParameterError
from specfun.identifiers import FAMILIES, SpecialFunctionId
from theorems.hypotheses import normalize_params

logger = logging.getLogger(__name__)

COMMANDS = ('eval', 'certify', 'check', 'figure', 'suite')

# polynomial maps given coefficient by coefficient
POLY = 'poly'

# every parameter flag the parser knows; --cparam is the Struve c
PARAM_FLAGS = ('a', 'c', 'mu', 'nu', 'kappa', 'delta')

# figure quantity names and the class test each one belongs to
QUANTITIES = {'p': PE, 'starlike': SE_STAR, 'convex': KE}

FORMATS = ('json', 'csv')


def parse_complex(text, name='value'):
    """'re' or 're,im' -> complex"""
    parts = [part.strip() for part in str(text).split(',')]
    if len(parts) not in (1, 2) or not all(parts):
        raise ParameterError(f"{name} must be written re or re,im, got {text!r}", exclusion=f"{name} format")
    try:
        value = complex(float(parts[0]), float(parts[1]) if len(parts) == 2 else 0.0)
    except ValueError:
        raise ParameterError(f"{name} must be written re or re,im, got {text!r}", exclusion=f"{name} format")
    return finite_complex(value, name)


def parse_float_list(text, name='value'):
    """'0.9,0.99' -> (0.9, 0.99)"""
    try:
        return tuple(float(part) for part in str(text).split(','))
    except ValueError:
        raise ParameterError(f"{name} must be comma separated numbers, got {text!r}", exclusion=f"{name} format")


def parse_coefficients(text):
    """'1,2' or '1,0.5+2j' -> tuple of complex; python complex syntax per entry"""
    coeffs = []
    for part in str(text).split(','):
        try:
            coeffs.append(finite_complex(complex(part.strip().replace(' ', '')), 'coefficient'))
        except ValueError:
            raise ParameterError(f"bad coefficient {part!r} in {text!r}", exclusion="coefficient format")
    return tuple(coeffs)


def collect_params(args):
    """the parameter flags that were given, with --cparam mapped to c"""
    params = {}
    for name in PARAM_FLAGS:
        value = getattr(args, name, None)
        if value is not None:
            params[name] = parse_complex(value, name)
    cparam = getattr(args, 'cparam', None)
    if cparam is not None:
        cparam = parse_complex(cparam, 'cparam')
        if 'c' in params and params['c'] != cparam:
            raise ParameterError("--c and --cparam disagree", exclusion="one value of c")
        params['c'] = cparam
    return params


@dataclass(frozen=True)
class RunConfig:
    """one fully validated command"""
    command: str
    family: str = None
    params: dict = field(default_factory=dict)
    function: SpecialFunctionId = None
    coeffs: tuple = ()
    theorem: str = None
    cls: str = PE
    quantity: str = None
    z_points: tuple = ()
    plan: SamplingPlan = field(default_factory=SamplingPlan)
    r_ref: float = 1.0
    series_options: dict = field(default_factory=dict)
    radius: float = None
    verify: bool = False
    filter: str = None
    output: str = None
    fmt: str = 'json'

    @property
    def figure_radius(self):
        return self.radius if self.radius is not None else self.plan.radii[-1]

    def build_map(self):
        """the AnalyticMap named by family/params (or the polynomial)"""
        if self.family == POLY:
            kind = NORMALIZED if len(self.coeffs) > 1 and self.coeffs[0] == 0 and self.coeffs[1] == 1 else RAW
            return AnalyticMap.polynomial(self.coeffs, kind)
        if not self.function.has_series:
            raise ParameterError(f"{self.family} has no power series to certify", exclusion="family with a series")
        series = self.function.build_series(self.r_ref, **self.series_options)
        return AnalyticMap(series, self.function.kind)


def _function_for(family, params, coeffs):
    if family == POLY:
        if params:
            raise ParameterError(f"poly takes --coeffs only, got {sorted(params)}", exclusion="parameter names")
        if not coeffs:
            raise ParameterError("poly needs --coeffs", exclusion="--coeffs given")
        return None
    if coeffs:
        raise ParameterError(f"--coeffs belongs to poly, not {family}", exclusion="--coeffs with poly")
    if family not in FAMILIES:
        raise ParameterError(f"unknown function family {family!r}",
                             exclusion=f"family in {sorted(FAMILIES) + [POLY]}")
    return SpecialFunctionId.create(family, **params)


def _plan_from(args, settings):
    if getattr(args, 'radii', None):
        settings.set('radii', list(parse_float_list(args.radii, 'radii')))
    if getattr(args, 'angles', None) is not None:
        settings.set('angles', args.angles)
    if getattr(args, 'refine', None) is not None:
        settings.set('refine_factor', args.refine)
    return settings.get_plan()


def build_config(args, settings):
    """RunConfig from parsed arguments and the loaded settings; raises on invalid input"""
    command = args.command
    if command not in COMMANDS:
        raise ParameterError(f"unknown command {command!r}", exclusion=f"command in {list(COMMANDS)}")
    plan = _plan_from(args, settings)
    if getattr(args, 'save_settings', False):
        settings.save_settings()

    fmt = getattr(args, 'format', None) or ('csv' if command == 'figure' else 'json')
    if fmt not in FORMATS:
        raise ParameterError(f"unknown format {fmt!r}", exclusion=f"format in {list(FORMATS)}")
    if fmt == 'csv' and command not in ('eval', 'figure'):
        raise ParameterError(f"{command} writes JSON only", exclusion="csv for eval and figure")
    if fmt == 'json' and command == 'figure':
        raise ParameterError("figure writes CSV only", exclusion="csv for figure")

    params = collect_params(args)
    options = dict(
        command=command,
        plan=plan,
        r_ref=settings.get_r_ref(),
        series_options=settings.get_series_options(),
        output=getattr(args, 'output', None),
        fmt=fmt,
    )

    if command == 'suite':
        return RunConfig(filter=getattr(args, 'filter', None), **options)

    if command == 'check':
        theorem = args.theorem
        normalize_params(theorem, params)
        return RunConfig(theorem=theorem, params=params, verify=bool(args.verify), **options)

    family = args.family
    coeffs = parse_coefficients(args.coeffs) if getattr(args, 'coeffs', None) else ()
    function = _function_for(family, params, coeffs)

    if command == 'eval':
        if not args.z:
            raise ParameterError("eval needs at least one --z point", exclusion="--z given")
        z_points = tuple(parse_complex(text, 'z') for text in args.z)
        return RunConfig(family=family, params=params, function=function, coeffs=coeffs,
                         z_points=z_points, **options)

    cls = getattr(args, 'cls', None) or PE
    if cls not in QUANTITIES.values():
        raise ParameterError(f"unknown class {cls!r}", exclusion=f"class in {sorted(QUANTITIES.values())}")
    quantity = getattr(args, 'quantity', None)
    if quantity is not None:
        if quantity not in QUANTITIES:
            raise ParameterError(f"unknown quantity {quantity!r}", exclusion=f"quantity in {sorted(QUANTITIES)}")
        cls = QUANTITIES[quantity]
    radius = getattr(args, 'radius', None)
    if radius is not None and not 0.0 < radius < 1.0:
        raise ParameterError(f"figure radius must lie in (0, 1), got {radius}", exclusion="0 < radius < 1")
    if family != POLY and not function.has_series:
        raise ParameterError(f"{family} has no power series to certify", exclusion="family with a series")
    config = RunConfig(family=family, params=params, function=function, coeffs=coeffs, cls=cls,
                       quantity=quantity, radius=radius, **options)
    logger.debug(f"{command}: {family} {params} as {cls}")
    return config
