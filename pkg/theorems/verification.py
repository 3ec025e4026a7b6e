"""
verification.py - Hypothesis check plus numerical certificate, end to end

The conditions in each result are sufficient, not necessary, so a failed
hypothesis does not stop the certification: the certificate is still
computed and reported as exploratory.
"""

import logging
from dataclasses import dataclass

from geometry.certifier import KE, SamplingPlan, class_membership
from geometry.maps import AnalyticMap, alexander_kernel, hadamard, identity_kernel, libera_kernel
from numerics.errors import PreconditionError
from specfun.struve import struve_chi_series
from .hypotheses import check_hypothesis
from .members import claimed_member

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MembershipResult:
    """a claimed member and the certificate it received"""
    label: str
    cls: str
    certificate: object

    def to_dict(self):
        return {'label': self.label, 'class': self.cls, 'certificate': self.certificate.to_dict()}


def verify_instance(theorem_id, params, plan=None, f_convex=None):
    """
    check the hypothesis and certify every claimed membership

    returns (HypothesisReport, tuple of MembershipResult)
    """
    plan = plan or SamplingPlan()
    report = check_hypothesis(theorem_id, params)
    if not report.all_satisfied:
        logger.warning(f"{theorem_id}: hypothesis fails at {params}, certificate is exploratory")
    results = []
    for member in claimed_member(theorem_id, params, f_convex):
        certificate = class_membership(member.function, member.cls, plan)
        results.append(MembershipResult(member.label, member.cls, certificate))
        logger.info(f"{theorem_id}: {member.label} in {member.cls}: {certificate.status} "
                    f"(margin {certificate.margin:.6g})")
    return report, tuple(results)


def convolution_closure_check(kappa, c, f_convex, plan=None):
    """
    certificate for chi * f in Ke, chi = 6 kappa (1 - u)/c

    f_convex must be a normalized map the caller knows to be convex; only
    the Hadamard product is certified here
    """
    plan = plan or SamplingPlan()
    if not isinstance(f_convex, AnalyticMap) or not f_convex.is_normalized:
        raise PreconditionError("convolution_closure_check needs a normalized AnalyticMap")
    report = check_hypothesis('STR_CONV', {'kappa': kappa, 'c': c})
    if not report.all_satisfied:
        logger.warning(f"STR_CONV: hypothesis fails at kappa={kappa}, c={c}, certificate is exploratory")
    chi = AnalyticMap.normalized(struve_chi_series(kappa, c))
    return class_membership(hadamard(chi, f_convex), KE, plan)


def _kernel_for(kappa, c, kernel):
    degree = struve_chi_series(kappa, c).degree
    return kernel(degree)


def identity_closure_check(kappa, c, plan=None):
    """convolution with z/(1-z), which leaves chi unchanged"""
    return convolution_closure_check(kappa, c, _kernel_for(kappa, c, identity_kernel), plan)


def alexander_closure_check(kappa, c, plan=None):
    """convolution with -log(1-z), i.e. the Alexander transform of chi"""
    return convolution_closure_check(kappa, c, _kernel_for(kappa, c, alexander_kernel), plan)


def libera_closure_check(kappa, c, plan=None):
    """convolution with -2(z + log(1-z))/z, i.e. the Libera transform of chi"""
    return convolution_closure_check(kappa, c, _kernel_for(kappa, c, libera_kernel), plan)
