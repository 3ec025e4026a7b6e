"""
theorems - hypothesis checkers, claimed members and end-to-end verification
"""

from .hypotheses import Condition, HypothesisReport, check_hypothesis
from .members import ClaimedMember, claimed_member, struve_recursion_member
from .registry import THEOREMS
from .verification import (
    MembershipResult,
    alexander_closure_check,
    convolution_closure_check,
    identity_closure_check,
    libera_closure_check,
    verify_instance,
)
