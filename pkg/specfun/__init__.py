"""
specfun - Kummer, Lommel, generalized Struve and Bessel functions
"""

from .bessel import bessel_j_eval
from .identifiers import FAMILIES, NORMALIZED, RAW, SpecialFunctionId
from .kummer import (
    kummer_contiguous_check,
    kummer_eval,
    kummer_lambda_series,
    kummer_quadrature_oracle,
    kummer_residual,
    kummer_series_residual,
    kummer_series,
    kummer_upsilon_series,
)
from .lommel import lommel_alexander_series, lommel_m_n, lommel_residual, lommel_series
from .residuals import OdeResidualReport, polar_grid
from .struve import (
    modified_struve_L_eval,
    struve_chi_series,
    struve_H_eval,
    struve_normalized_from_H,
    struve_normalized_series,
    struve_recursion_check,
    struve_u_residual,
    struve_u_series,
)
