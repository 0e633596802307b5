"""Exception hierarchy shared by every module of the package."""


class UCRadiusError(Exception):
    """Base class for all errors raised by ucradius."""


class DomainError(UCRadiusError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class PoleError(DomainError):
    """Evaluation requested at a pole (e.g. Gamma at a nonpositive integer)."""


class NearPoleError(DomainError):
    """A quotient denominator became too small relative to its numerator."""


class InvariantViolation(UCRadiusError, ValueError):
    """Hypotheses of a checker (e.g. Lemma cases) are not met."""


class NumericalFailure(UCRadiusError, ArithmeticError):
    """Base class for failures of an iterative numerical procedure."""


class NoConvergence(NumericalFailure):
    """A series did not reach its tail bound within ``max_terms``."""


class BracketScanExhausted(NumericalFailure):
    """A sign-change scan did not find the requested number of roots."""


class RootNotBracketed(NumericalFailure):
    """Internal fault: a monotone profile failed to change sign on its domain."""
