"""
certifier.py - Grid certification of p(z) subordinate to e^z

e^z is univalent on the unit disk, so p is subordinate to it exactly when
p(0) = 1 and p maps the disk into exp(disk) = {w : |Log w| < 1}. We sample
|Log p| on a ladder of circles, refine around the worst angle of each circle
and report the largest value with where it happened.

A 'verified_on_grid' certificate is evidence, not proof: it says the
maximum over the samples stayed below 1 and by how much.
"""

import math
import logging
from dataclasses import dataclass, field

import numpy as np

from numerics.complex_math import finite_complex, principal_log
from numerics.errors import PreconditionError
from numerics.series import series_eval_many
from .maps import AnalyticMap, convex_quantity, starlike_quantity

logger = logging.getLogger(__name__)

VERIFIED = 'verified_on_grid'
REFUTED = 'refuted'
INCONCLUSIVE = 'inconclusive'

# class names accepted by class_membership
PE = 'Pe'
SE_STAR = 'Se_star'
KE = 'Ke'

# default sampling plan
DEFAULT_RADII = (0.9, 0.99, 0.999)
DEFAULT_ANGLES = 4096
DEFAULT_REFINE = 8

# fewest angles a plan may use
MIN_ANGLES = 256

# |Log p| above 1 + this on a sample refutes
REFUTE_TOL = 1e-12

# |Log p| within this below 1 cannot be called either way
INCONCLUSIVE_BAND = 1e-9

# p(0) must equal 1 to within this
P0_TOL = 1e-12

# refinement passes around the argmax of each circle
REFINE_PASSES = 2


@dataclass(frozen=True)
class SamplingPlan:
    """circles |z| = r for r in radii, each sampled at `angles` equally spaced points"""
    radii: tuple = DEFAULT_RADII
    angles: int = DEFAULT_ANGLES
    refine_factor: int = DEFAULT_REFINE

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        object.__setattr__(self, 'radii', radii)
        if not radii:
            raise PreconditionError("sampling plan needs at least one radius")
        if any(not 0.0 < r < 1.0 for r in radii):
            raise PreconditionError(f"plan radii must lie in (0, 1), got {radii}")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise PreconditionError(f"plan radii must be strictly ascending, got {radii}")
        if int(self.angles) != self.angles or self.angles < MIN_ANGLES:
            raise PreconditionError(f"plan needs an integer angle count >= {MIN_ANGLES}, got {self.angles}")
        if int(self.refine_factor) != self.refine_factor or self.refine_factor < 1:
            raise PreconditionError(f"refine factor must be a positive integer, got {self.refine_factor}")

    def with_angles(self, angles):
        return SamplingPlan(self.radii, angles, self.refine_factor)

    def to_dict(self):
        return {'radii': list(self.radii), 'angles': self.angles, 'refine_factor': self.refine_factor}


@dataclass(frozen=True)
class SubordinationCertificate:
    """verdict of one grid certification"""
    status: str
    max_log_mod: float
    witness: complex
    plan_used: SamplingPlan
    zero_encountered: bool = False
    circle_max: tuple = field(default=())

    @property
    def margin(self):
        return 1.0 - self.max_log_mod

    @property
    def verified(self):
        return self.status == VERIFIED

    def to_dict(self):
        return {
            'status': self.status,
            'max_log_mod': self.max_log_mod,
            'witness': {'re': self.witness.real, 'im': self.witness.imag},
            'margin': self.margin,
            'radii': list(self.plan_used.radii),
            'angles': self.plan_used.angles,
            'refine_factor': self.plan_used.refine_factor,
            'zero_encountered': self.zero_encountered,
            'circle_max': list(self.circle_max),
        }


def in_exp_disk(w):
    """(w lies in exp(disk), |Log w|); w = 0 gives (False, inf)"""
    w = finite_complex(w, 'w')
    if w == 0:
        return False, math.inf
    value = abs(principal_log(w))
    return value < 1.0, value


def _log_mod(values):
    """|Log w| elementwise, inf where w = 0"""
    with np.errstate(divide='ignore', invalid='ignore'):
        mods = np.abs(np.log(values))
    mods[values == 0] = math.inf
    return mods


def _as_series(p):
    return p.series if isinstance(p, AnalyticMap) else p


def _refine(series, r, theta, step, refine_factor):
    """search [theta - step, theta + step] on finer and finer grids"""
    best_mod, best_theta = -1.0, theta
    for _ in range(REFINE_PASSES):
        local = best_theta + step * np.linspace(-1.0, 1.0, 2 * refine_factor + 1)
        mods = _log_mod(series_eval_many(series, r * np.exp(1j * local)))
        k = int(np.argmax(mods))
        if mods[k] > best_mod:
            best_mod, best_theta = float(mods[k]), float(local[k])
        step /= refine_factor
    return best_mod, best_theta


def certify_subordination_to_exp(p, plan=None):
    """
    grid certificate for p(z) subordinate to e^z

    p is an AnalyticMap (or bare PowerSeries) with constant term 1
    """
    plan = plan or SamplingPlan()
    series = _as_series(p)
    if abs(series[0] - 1.0) > P0_TOL:
        raise PreconditionError(f"subordination to e^z needs p(0) = 1, got {series[0]}")

    thetas = 2.0 * np.pi * np.arange(plan.angles) / plan.angles
    step = 2.0 * np.pi / plan.angles
    best_mod, witness = 0.0, 0j
    zero_encountered = False
    circle_max = []
    for r in plan.radii:
        mods = _log_mod(series_eval_many(series, r * np.exp(1j * thetas)))
        k = int(np.argmax(mods))
        circle_mod, circle_theta = float(mods[k]), float(thetas[k])
        if math.isinf(circle_mod):
            zero_encountered = True
        elif plan.refine_factor > 1:
            refined_mod, refined_theta = _refine(series, r, circle_theta, step, plan.refine_factor)
            if refined_mod > circle_mod:
                circle_mod, circle_theta = refined_mod, refined_theta
        circle_max.append(circle_mod)
        if circle_mod > best_mod:
            best_mod, witness = circle_mod, complex(r * np.exp(1j * circle_theta))

    if zero_encountered or best_mod > 1.0 + REFUTE_TOL:
        status = REFUTED
    elif best_mod >= 1.0 - INCONCLUSIVE_BAND:
        status = INCONCLUSIVE
    else:
        status = VERIFIED
    certificate = SubordinationCertificate(status, best_mod, witness, plan, zero_encountered, tuple(circle_max))
    logger.info(f"certificate: {status}, max |Log p| = {best_mod:.12g} at z = {witness:.6g}")
    return certificate


# the function of f whose image is tested for each class
CLASS_QUANTITIES = {
    PE: lambda f: f,
    SE_STAR: starlike_quantity,
    KE: convex_quantity,
}


def class_quantity(f, cls):
    """p for the class test: f itself (Pe), zf'/f (Se_star) or 1 + zf''/f' (Ke)"""
    if cls not in CLASS_QUANTITIES:
        raise PreconditionError(f"unknown class {cls!r}, expected one of {sorted(CLASS_QUANTITIES)}")
    return CLASS_QUANTITIES[cls](f)


def class_membership(f, cls, plan=None):
    """certify f in Pe, Se_star or Ke"""
    logger.debug(f"class_membership: {cls}")
    return certify_subordination_to_exp(class_quantity(f, cls), plan)


def _closed_thetas(angles):
    return 2.0 * np.pi * np.arange(angles + 1) / angles


def boundary_curve(angles=DEFAULT_ANGLES):
    """(theta, exp(e^{i theta})) on [0, 2 pi], both ends included"""
    thetas = _closed_thetas(angles)
    values = np.exp(np.exp(1j * thetas))
    values[-1] = values[0]
    return thetas, values


def image_curve(p, r, angles=DEFAULT_ANGLES):
    """(theta, p(r e^{i theta})) on [0, 2 pi], both ends included"""
    thetas = _closed_thetas(angles)
    values = series_eval_many(_as_series(p), r * np.exp(1j * thetas))
    # the last angle is 2 pi exactly, so close the curve on the first sample
    values[-1] = values[0]
    return thetas, values
