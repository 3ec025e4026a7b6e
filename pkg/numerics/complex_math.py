"""
complex_math.py - Complex elementary functions

Principal logarithm, the complex gamma function (Lanczos approximation with
reflection) and the Pochhammer symbol. Everything works on Python complex
numbers and refuses NaN/Inf.
"""

import cmath
import math
import logging

from .errors import DomainError

logger = logging.getLogger(__name__)

# Lanczos coefficients for g = 7, n = 9
LANCZOS_G = 7
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# below this real part we use the reflection formula
REFLECTION_THRESHOLD = 0.5

# the gamma approximation is only claimed accurate up to this modulus
GAMMA_MAX_MODULUS = 50.0

LOG_SQRT_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def finite_complex(value, name='value'):
    """coerce to complex, raising DomainError on NaN or infinite components"""
    try:
        z = complex(value)
    except (TypeError, ValueError) as e:
        raise DomainError(f"{name} is not a complex number: {value!r}") from e
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{name} must be finite, got {z}")
    return z


def is_nonpositive_integer(value):
    """True when value is exactly one of 0, -1, -2, ..."""
    z = complex(value)
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def principal_log(w):
    """
    principal logarithm Log w with imaginary part in (-pi, pi]

    cmath.log returns -pi on the negative real axis when the imaginary
    part is -0.0; that is folded back to +pi here
    """
    w = finite_complex(w, 'w')
    if w == 0:
        raise DomainError("log is undefined at 0")
    result = cmath.log(w)
    if result.imag == -math.pi:
        result = complex(result.real, math.pi)
    return result


def complex_gamma(z):
    """
    Euler gamma function for complex z

    relative error is about 1e-13 or better for |z| <= 50; poles at the
    nonpositive integers raise DomainError
    """
    z = finite_complex(z, 'z')
    if is_nonpositive_integer(z):
        raise DomainError(f"gamma has a pole at {z.real:g}")
    if abs(z) > GAMMA_MAX_MODULUS:
        logger.debug(f"complex_gamma called with |z| = {abs(z):.3g}, outside the accurate range")

    if z.real < REFLECTION_THRESHOLD:
        # reflection: gamma(z) gamma(1 - z) = pi / sin(pi z)
        return cmath.pi / (cmath.sin(cmath.pi * z) * complex_gamma(1.0 - z))

    z -= 1.0
    x = LANCZOS_COEFFS[0]
    for i in range(1, len(LANCZOS_COEFFS)):
        x += LANCZOS_COEFFS[i] / (z + i)
    t = z + LANCZOS_G + 0.5
    # exp of the log form so large |z| does not overflow the power
    return cmath.exp(LOG_SQRT_TWO_PI + (z + 0.5) * cmath.log(t) - t) * x


def pochhammer(x, n):
    """rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1"""
    x = finite_complex(x, 'x')
    if n < 0 or int(n) != n:
        raise DomainError(f"pochhammer needs a nonnegative integer n, got {n!r}")
    result = complex(1.0)
    for k in range(int(n)):
        result *= x + k
    return result


def principal_power(z, p):
    """
    z**p on the principal branch, exp(p Log z)

    integer exponents are plain powers and work on the whole plane; any
    other exponent refuses z on the cut (-inf, 0]
    """
    z = finite_complex(z, 'z')
    p = finite_complex(p, 'p')
    if p.imag == 0 and p.real == math.floor(p.real):
        k = int(p.real)
        if z == 0 and k < 0:
            raise DomainError(f"0 raised to the negative power {k}")
        return z ** k
    if z.imag == 0 and z.real <= 0:
        raise DomainError(f"z = {z.real:g} lies on the branch cut (-inf, 0] of z**{p}")
    return cmath.exp(p * principal_log(z))
