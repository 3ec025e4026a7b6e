"""
geometry - starlike/convex quantities, operators and the exp-disk certifier
"""

from .certifier import (
    INCONCLUSIVE,
    KE,
    PE,
    REFUTED,
    SE_STAR,
    VERIFIED,
    SamplingPlan,
    SubordinationCertificate,
    boundary_curve,
    certify_subordination_to_exp,
    class_membership,
    class_quantity,
    image_curve,
    in_exp_disk,
)
from .maps import (
    AnalyticMap,
    alexander,
    alexander_kernel,
    convex_quantity,
    hadamard,
    identity_kernel,
    libera,
    libera_kernel,
    starlike_quantity,
)
