"""
errors.py - Exceptions raised by the expdisk library

Every public operation raises one of these instead of returning NaN or a
sentinel. The command line maps all of them to exit code 1.
"""


class ExpdiskError(Exception):
    """base class for every error raised by this project"""


class DomainError(ExpdiskError, ValueError):
    """input outside the domain of a function (log 0, gamma pole, branch cut)"""


class OutOfDomainError(DomainError):
    """series evaluated outside the disk its tail bound is valid on"""


class ParameterError(ExpdiskError, ValueError):
    """
    parameters violate a family exclusion

    `exclusion` names the rule that fired so the CLI can report it
    """

    def __init__(self, message, exclusion=None):
        super().__init__(message)
        self.exclusion = exclusion


class ConvergenceError(ExpdiskError, ArithmeticError):
    """the ratio test never settled within the term budget"""


class DegenerateInputError(ExpdiskError, ValueError):
    """series division by a series with zero constant term"""


class PreconditionError(ExpdiskError, ValueError):
    """caller broke a stated precondition (p(0) != 1, bad sampling plan, ...)"""
