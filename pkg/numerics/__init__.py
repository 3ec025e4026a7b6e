"""
numerics - complex elementary functions and truncated power series
"""

from .complex_math import complex_gamma, finite_complex, pochhammer, principal_log, principal_power
from .errors import (
    ConvergenceError,
    DegenerateInputError,
    DomainError,
    ExpdiskError,
    OutOfDomainError,
    ParameterError,
    PreconditionError,
)
from .series import (
    PowerSeries,
    add,
    divide,
    integrate,
    majorant_tail,
    multiply,
    ratio_series,
    ratio_sum,
    scale,
    series_derivative,
    series_eval,
    series_eval_many,
    shift_down,
    shift_up,
    spread_even,
)
