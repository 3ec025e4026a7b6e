"""
series.py - Truncated power series about the origin

A PowerSeries is the carrier for every special function in this project:
coefficients c_0 ... c_N plus a bound on the part that was cut off. The
bound is valid on the disk |z| <= r_ref and the way it was obtained is
recorded in `tail_kind`:

- 'exact'      the series is a polynomial, nothing was cut off
- 'majorant'   geometric majorant from the ratio of successive terms
- 'heuristic'  propagated through an operation with a rough factor
- 'unbounded'  no useful bound (kernels like z/(1-z) at r_ref = 1)
"""

import math
import logging

import numpy as np

from .complex_math import finite_complex
from .errors import (
    ConvergenceError,
    DegenerateInputError,
    DomainError,
    OutOfDomainError,
)

logger = logging.getLogger(__name__)

TAIL_EXACT = 'exact'
TAIL_MAJORANT = 'majorant'
TAIL_HEURISTIC = 'heuristic'
TAIL_UNBOUNDED = 'unbounded'

# ratio-majorant rule: stop once successive term ratios are below this
MAJORANT_RATIO = 0.5

# fewest coefficients kept for a non-terminating series (degree 30)
MIN_DEGREE = 30

# hard cap on the number of terms before we give up
MAX_TERMS = 10_000

# target for the truncated tail, relative to the largest term seen
TAIL_RTOL = 1e-17

# working degree used when dividing two polynomials exactly
QUOTIENT_DEGREE = 64

# inputs whose tail is below this are zero-padded out to QUOTIENT_DEGREE
PAD_TAIL = 1e-9

# how many trailing coefficients the tail estimate looks at
TAIL_WINDOW = 8

# slack on the |z| <= r_ref check so points on the circle itself pass
RADIUS_SLACK = 1e-12


class PowerSeries:
    """
    truncated Taylor series c_0 + c_1 z + ... + c_N z^N

    instances are immutable: the coefficient array is read-only and every
    operation below returns a new series
    """

    def __init__(self, coeffs, tail_bound=0.0, r_ref=1.0, tail_kind=TAIL_EXACT):
        arr = np.array(coeffs, dtype=complex).ravel()
        if arr.size == 0:
            raise DomainError("a power series needs at least one coefficient")
        if not np.all(np.isfinite(arr)):
            raise DomainError("power series coefficients must be finite")
        tail_bound = float(tail_bound)
        if math.isnan(tail_bound) or tail_bound < 0:
            raise DomainError(f"tail bound must be nonnegative, got {tail_bound}")
        if math.isinf(tail_bound):
            tail_kind = TAIL_UNBOUNDED
        r_ref = float(r_ref)
        if not 0.0 < r_ref <= 1.0:
            raise DomainError(f"r_ref must lie in (0, 1], got {r_ref}")
        arr.flags.writeable = False
        self._coeffs = arr
        self._tail_bound = tail_bound
        self._r_ref = r_ref
        self._tail_kind = tail_kind

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def tail_bound(self):
        return self._tail_bound

    @property
    def r_ref(self):
        return self._r_ref

    @property
    def tail_kind(self):
        return self._tail_kind

    @property
    def degree(self):
        return len(self._coeffs) - 1

    @property
    def is_exact(self):
        return self._tail_kind == TAIL_EXACT

    def __len__(self):
        return len(self._coeffs)

    def __getitem__(self, index):
        """coefficient of z**index (zero beyond the stored degree)"""
        if index < len(self._coeffs):
            return complex(self._coeffs[index])
        return 0j

    def __call__(self, z):
        return series_eval(self, z)

    def __repr__(self):
        return (f"PowerSeries(degree={self.degree}, tail_bound={self._tail_bound:.3g}, "
                f"r_ref={self._r_ref}, tail_kind={self._tail_kind!r})")

    def padded(self, length):
        """coefficients as a fresh writable array of the given length"""
        out = np.zeros(max(length, len(self._coeffs)), dtype=complex)
        out[:len(self._coeffs)] = self._coeffs
        return out[:length] if length < len(self._coeffs) else out


def series_eval_many(s, zs):
    """
    evaluate a series on an array of points

    terms are accumulated with Kahan compensation (alternating series like
    Phi(-100; 102; z) lose digits otherwise). raises OutOfDomainError if any
    point lies outside |z| <= r_ref
    """
    zs = np.asarray(zs, dtype=complex)
    if not np.all(np.isfinite(zs)):
        raise DomainError("evaluation points must be finite")
    if zs.size and np.max(np.abs(zs)) > s.r_ref * (1.0 + RADIUS_SLACK):
        raise OutOfDomainError(
            f"|z| = {np.max(np.abs(zs)):.6g} exceeds r_ref = {s.r_ref} of this series")

    total = np.zeros(zs.shape, dtype=complex)
    compensation = np.zeros(zs.shape, dtype=complex)
    power = np.ones(zs.shape, dtype=complex)
    for c in s.coeffs:
        y = c * power - compensation
        t = total + y
        compensation = (t - total) - y
        total = t
        power = power * zs
    return total


def series_eval(s, z):
    """evaluate a series at one point (scalar form of series_eval_many)"""
    z = finite_complex(z, 'z')
    return complex(series_eval_many(s, np.array([z]))[0])


def series_derivative(s):
    """
    term-by-term derivative: coefficient k of the result is (k+1) c_{k+1}

    the tail is scaled by N/(1 - r_ref), or by N^2 when r_ref = 1; both are
    heuristics and the result is tagged as such
    """
    c = s.coeffs
    if len(c) == 1:
        return PowerSeries([0.0], 0.0 if s.is_exact else s.tail_bound, s.r_ref, s.tail_kind)
    k = np.arange(1, len(c))
    coeffs = k * c[1:]
    if s.is_exact:
        return PowerSeries(coeffs, 0.0, s.r_ref, TAIL_EXACT)
    n = len(c)
    factor = n / (1.0 - s.r_ref) if s.r_ref < 1.0 else float(n * n)
    return PowerSeries(coeffs, s.tail_bound * factor, s.r_ref, TAIL_HEURISTIC)


def ratio_series(first, ratio, r_ref=1.0, offset=0, min_degree=MIN_DEGREE, max_terms=MAX_TERMS):
    """
    build a series from its leading coefficient and the term ratio

    coefficient `offset` is `first`, lower ones are zero, and
    c_{n+1} = c_n * ratio(n). an exactly zero ratio ends the series as a
    polynomial. otherwise terms are added until the degree is at least
    `min_degree`, two successive term ratios |c_{n+1}/c_n| r_ref are below
    1/2 and not increasing, and the geometric majorant of the rest is
    negligible; the majorant becomes the tail bound
    """
    first = finite_complex(first, 'first')
    if first == 0:
        raise DomainError("the leading coefficient of a ratio series must be nonzero")
    coeffs = [0j] * offset + [first]
    max_term = abs(first) * r_ref ** offset
    previous_ratio = None
    n = offset
    while True:
        if len(coeffs) > max_terms:
            raise ConvergenceError(
                f"ratio test did not settle within {max_terms} terms")
        q = complex(ratio(n))
        if q == 0:
            return PowerSeries(coeffs, 0.0, r_ref, TAIL_EXACT)
        following = coeffs[-1] * q
        term_ratio = abs(q) * r_ref
        next_term = abs(following) * r_ref ** (n + 1)
        if (n >= min_degree and previous_ratio is not None
                and term_ratio <= MAJORANT_RATIO and term_ratio <= previous_ratio):
            tail = next_term / (1.0 - term_ratio)
            if tail <= TAIL_RTOL * max(1.0, max_term):
                logger.debug(f"ratio series settled at degree {n}, tail {tail:.3g}")
                return PowerSeries(coeffs, tail, r_ref, TAIL_MAJORANT)
        coeffs.append(following)
        max_term = max(max_term, next_term)
        previous_ratio = term_ratio
        n += 1


def majorant_tail(coeffs, r_ref):
    """
    estimate the tail of a computed coefficient sequence

    looks at the last few nonzero terms |c_k| r_ref^k, takes the largest
    per-step ratio between them and sums the geometric majorant. returns
    (bound, kind); a ratio of 1 or more gives an unbounded tail
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    terms = np.abs(coeffs) * r_ref ** np.arange(len(coeffs))
    window = terms[-TAIL_WINDOW:]
    idx = np.nonzero(window)[0]
    if idx.size == 0:
        return 0.0, TAIL_MAJORANT
    if idx.size == 1:
        # a single surviving term says nothing about decay
        return float(window[idx[0]]), TAIL_HEURISTIC
    steps = np.diff(idx)
    rho = float(np.max((window[idx[1:]] / window[idx[:-1]]) ** (1.0 / steps)))
    if rho >= 1.0:
        return math.inf, TAIL_UNBOUNDED
    last = float(window[idx[-1]]) * rho ** (len(window) - 1 - idx[-1])
    return last * rho / (1.0 - rho), TAIL_MAJORANT


def _combined_kind(*series):
    kinds = [s.tail_kind for s in series]
    if TAIL_UNBOUNDED in kinds:
        return TAIL_UNBOUNDED
    if TAIL_HEURISTIC in kinds:
        return TAIL_HEURISTIC
    if all(k == TAIL_EXACT for k in kinds):
        return TAIL_EXACT
    return TAIL_MAJORANT


def add(s, t):
    """s + t"""
    n = max(len(s), len(t))
    coeffs = s.padded(n) + t.padded(n)
    return PowerSeries(coeffs, s.tail_bound + t.tail_bound, min(s.r_ref, t.r_ref), _combined_kind(s, t))


def scale(s, alpha):
    """alpha * s"""
    alpha = finite_complex(alpha, 'alpha')
    kind = TAIL_EXACT if alpha == 0 else s.tail_kind
    return PowerSeries(s.coeffs * alpha, s.tail_bound * abs(alpha), s.r_ref, kind)


def multiply(s, t):
    """
    Cauchy product s * t

    polynomials multiply exactly; otherwise the result is cut at the smaller
    degree and its tail re-estimated from the computed coefficients
    """
    r_ref = min(s.r_ref, t.r_ref)
    full = np.convolve(s.coeffs, t.coeffs)
    if s.is_exact and t.is_exact:
        return PowerSeries(full, 0.0, r_ref, TAIL_EXACT)
    coeffs = full[:min(len(s), len(t))]
    tail, kind = majorant_tail(coeffs, r_ref)
    return PowerSeries(coeffs, tail, r_ref, kind)


def divide(s, t, degree=None):
    """
    quotient s / t by recursive solution of the coefficient equations

    q_n = (s_n - sum_{k=1..n} t_k q_{n-k}) / t_0. inputs with a negligible
    tail (polynomials included) are padded with zeros and divided out to at
    least QUOTIENT_DEGREE; anything else stops at the smaller degree
    """
    t0 = t[0]
    if t0 == 0:
        raise DegenerateInputError("cannot divide by a series with zero constant term")
    if degree is None:
        if s.tail_bound <= PAD_TAIL and t.tail_bound <= PAD_TAIL:
            degree = max(s.degree, t.degree, QUOTIENT_DEGREE)
        else:
            degree = min(s.degree, t.degree)
    n = degree + 1
    a = s.padded(n)[:n]
    b = t.padded(n)[:n]
    q = np.zeros(n, dtype=complex)
    for k in range(n):
        acc = a[k]
        if k:
            acc -= np.dot(b[1:k + 1], q[k - 1::-1])
        q[k] = acc / t0
    r_ref = min(s.r_ref, t.r_ref)
    tail, kind = majorant_tail(q, r_ref)
    return PowerSeries(q, tail, r_ref, kind)


def shift_up(s):
    """z * s"""
    coeffs = np.concatenate(([0j], s.coeffs))
    return PowerSeries(coeffs, s.tail_bound * s.r_ref, s.r_ref, s.tail_kind)


def shift_down(s):
    """s / z, for a series whose constant term is zero"""
    if s[0] != 0:
        raise DegenerateInputError("shift_down needs a zero constant term")
    coeffs = s.coeffs[1:] if len(s) > 1 else np.zeros(1, dtype=complex)
    return PowerSeries(coeffs, s.tail_bound / s.r_ref, s.r_ref, s.tail_kind)


def spread_even(s):
    """substitute z -> z^2, i.e. c_k moves to the coefficient of z^(2k)"""
    coeffs = np.zeros(2 * len(s) - 1, dtype=complex)
    coeffs[::2] = s.coeffs
    return PowerSeries(coeffs, s.tail_bound, math.sqrt(s.r_ref), s.tail_kind)


def integrate(s):
    """antiderivative vanishing at 0"""
    k = np.arange(1, len(s) + 1)
    coeffs = np.concatenate(([0j], s.coeffs / k))
    return PowerSeries(coeffs, s.tail_bound * s.r_ref, s.r_ref, s.tail_kind)


def ratio_sum(first, ratio, w, min_degree=MIN_DEGREE, max_terms=MAX_TERMS):
    """
    value of the ratio series at any finite w, including |w| > 1

    the variable is rescaled onto the unit disk (coefficients c_n W^n with
    W = max(1, |w|)) and the series evaluated at w / W
    """
    w = finite_complex(w, 'w')
    w_scale = max(1.0, abs(w))
    s = ratio_series(first, lambda n: ratio(n) * w_scale, 1.0,
                     min_degree=min_degree, max_terms=max_terms)
    return series_eval(s, w / w_scale)
