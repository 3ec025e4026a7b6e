"""
maps.py - Analytic maps on the unit disk and the operators acting on them

An AnalyticMap is a PowerSeries tagged 'raw' or 'normalized'. Normalized
maps (c_0 = 0, c_1 = 1) are the ones starlikeness and convexity talk about;
raw maps with c_0 = 1 are candidates for subordination to e^z.

Starlike quantity  z f'(z) / f(z)
Convex quantity    1 + z f''(z) / f'(z)
Hadamard product   (f * g)(z) = sum a_n b_n z^n
Alexander          A[f](z) = int_0^z f(t)/t dt       = (-log(1-z)) * f
Libera             L[f](z) = (2/z) int_0^z f(t) dt   = (-2(z + log(1-z))/z) * f
"""

import math
import logging
from dataclasses import dataclass

import numpy as np

from numerics.errors import DegenerateInputError, PreconditionError
from numerics.series import (
    TAIL_EXACT,
    PowerSeries,
    add,
    divide,
    integrate,
    majorant_tail,
    scale,
    series_derivative,
    series_eval,
    series_eval_many,
    shift_down,
    shift_up,
)

logger = logging.getLogger(__name__)

RAW = 'raw'
NORMALIZED = 'normalized'

# default truncation degree for the convolution kernels
KERNEL_DEGREE = 64


@dataclass(frozen=True)
class AnalyticMap:
    """a power series plus whether it is normalized (c_0 = 0, c_1 = 1)"""
    series: PowerSeries
    kind: str = RAW

    def __post_init__(self):
        if self.kind not in (RAW, NORMALIZED):
            raise PreconditionError(f"map kind must be {RAW!r} or {NORMALIZED!r}, got {self.kind!r}")
        if self.kind == NORMALIZED and (self.series[0] != 0 or self.series[1] != 1):
            raise PreconditionError(
                f"normalized map needs c_0 = 0 and c_1 = 1, got {self.series[0]} and {self.series[1]}")

    @classmethod
    def normalized(cls, series):
        return cls(series, NORMALIZED)

    @classmethod
    def raw(cls, series):
        return cls(series, RAW)

    @classmethod
    def polynomial(cls, coeffs, kind=RAW):
        return cls(PowerSeries(coeffs), kind)

    @property
    def is_normalized(self):
        return self.kind == NORMALIZED

    @property
    def coeffs(self):
        return self.series.coeffs

    def __call__(self, z):
        return series_eval(self.series, z)

    def evaluate_many(self, zs):
        return series_eval_many(self.series, zs)


def _require_normalized(f, operation):
    if not f.is_normalized:
        raise PreconditionError(f"{operation} needs a normalized map (c_0 = 0, c_1 = 1)")


def starlike_quantity(f):
    """z f'(z) / f(z) as a series, computed as f' divided by f(z)/z"""
    _require_normalized(f, 'starlike_quantity')
    f_over_z = shift_down(f.series)
    if f_over_z[0] == 0:
        raise DegenerateInputError("f(z)/z vanishes at the origin")
    return AnalyticMap.raw(divide(series_derivative(f.series), f_over_z))


def convex_quantity(f):
    """1 + z f''(z) / f'(z) as a series"""
    _require_normalized(f, 'convex_quantity')
    d1 = series_derivative(f.series)
    d2 = series_derivative(d1)
    one = PowerSeries([1.0], 0.0, f.series.r_ref)
    return AnalyticMap.raw(add(one, shift_up(divide(d2, d1))))


def hadamard(f, g):
    """
    coefficientwise product, cut at the smaller degree

    exact when the shorter factor is an exact polynomial; otherwise the tail
    is re-estimated from the product coefficients
    """
    _require_normalized(f, 'hadamard')
    _require_normalized(g, 'hadamard')
    n = min(len(f.series), len(g.series))
    coeffs = f.coeffs[:n] * g.coeffs[:n]
    r_ref = min(f.series.r_ref, g.series.r_ref)
    shorter = f.series if len(f.series) <= len(g.series) else g.series
    if shorter.is_exact:
        product = PowerSeries(coeffs, 0.0, r_ref, TAIL_EXACT)
    else:
        tail, kind = majorant_tail(coeffs, r_ref)
        product = PowerSeries(coeffs, tail, r_ref, kind)
    return AnalyticMap.normalized(product)


def alexander(f):
    """A[f](z) = integral of f(t)/t from 0 to z: coefficient n becomes a_n / n"""
    _require_normalized(f, 'alexander')
    return AnalyticMap.normalized(integrate(shift_down(f.series)))


def libera(f):
    """L[f](z) = (2/z) integral of f(t) from 0 to z: coefficient n becomes 2 a_n / (n + 1)"""
    _require_normalized(f, 'libera')
    return AnalyticMap.normalized(scale(shift_down(integrate(f.series)), 2.0))


def _kernel(degree, weights):
    if degree < 1:
        raise PreconditionError(f"kernel degree must be at least 1, got {degree}")
    coeffs = np.zeros(degree + 1, dtype=complex)
    coeffs[1:] = weights(np.arange(1, degree + 1))
    # none of the kernels converges on |z| = 1
    return AnalyticMap.normalized(PowerSeries(coeffs, math.inf, 1.0))


def identity_kernel(degree=KERNEL_DEGREE):
    """z / (1 - z), the identity for the Hadamard product"""
    return _kernel(degree, lambda n: np.ones(n.shape))


def alexander_kernel(degree=KERNEL_DEGREE):
    """-log(1 - z) = sum z^n / n"""
    return _kernel(degree, lambda n: 1.0 / n)


def libera_kernel(degree=KERNEL_DEGREE):
    """-2(z + log(1 - z)) / z = sum 2 z^n / (n + 1)"""
    return _kernel(degree, lambda n: 2.0 / (n + 1))
