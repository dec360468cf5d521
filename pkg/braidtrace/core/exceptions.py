from typing import Any, Dict, Optional


class BraidTraceException(Exception):
    """Base exception for braidtrace"""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


# Input problems: the caller asked for something we cannot compute.

class ValidationError(BraidTraceException):
    """Raised when user input is malformed or outside supported ranges"""
    pass


class UnsupportedTypeError(ValidationError):
    """Raised for Coxeter types outside A_n (n <= 8) and I2(m) (3 <= m <= 12)"""
    pass


class BraidSyntaxError(ValidationError):
    """Raised when a braid word cannot be parsed or uses a bad generator"""
    pass


class SlopeError(ValidationError):
    """Raised when a slope does not satisfy an operation's precondition"""
    pass


class SizeGuardError(ValidationError):
    """Raised when an enumeration would exceed a configured limit"""
    pass


class FourierDataError(ValidationError):
    """Raised when a Fourier table is missing or violates its invariants"""
    pass


class SystemMismatchError(ValidationError):
    """Raised when values attached to different Coxeter systems are combined"""
    pass


class PoleError(ValidationError):
    """Raised when evaluating a rational function at one of its poles"""
    pass


class SeriesError(ValidationError):
    """Raised when a series expansion is requested where none exists"""
    pass


# Internal consistency: an identity that must hold exactly did not.

class ConsistencyError(BraidTraceException):
    """Raised when an exact identity fails"""
    pass


class DenominatorError(ConsistencyError):
    """Raised when a denominator expected to cancel survives"""
    pass


class IntegralityError(ConsistencyError):
    """Raised when a value expected to be a rational integer is not"""
    pass


class DecompositionError(ConsistencyError):
    """Raised when a triangular decomposition has no exact solution"""
    pass


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the CLI exit code"""
    if isinstance(exc, ValidationError):
        return 2
    if isinstance(exc, (ConsistencyError, AssertionError)):
        return 3
    if isinstance(exc, BraidTraceException):
        return 3
    return 1
