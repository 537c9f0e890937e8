"""Exception types used across the package."""


class SchurJetError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(SchurJetError, ValueError):
    """An operation was called with incompatible or invalid arguments."""


class InputError(SchurJetError, ValueError):
    """Problem data or a serialized document failed validation."""


class InsufficientDataError(UsageError):
    """A structured quantity was requested beyond what the jet determines."""


class NonUnitDivisorError(SchurJetError, ZeroDivisionError):
    """Jet division by a series whose constant term is numerically zero."""


class PoleError(SchurJetError, ArithmeticError):
    """Pointwise evaluation hit a pole of the representation."""


class DegenerateSystemError(SchurJetError):
    """A linear system behind an evaluator is singular at the requested point."""


class PreconditionError(SchurJetError):
    """A documented precondition of a constructor does not hold."""


class ConstructionError(SchurJetError):
    """An escalating construction reached its size limit without succeeding."""


class InconsistencyError(SchurJetError):
    """Classification and synthesis disagree; indicates inconsistent data or a bug."""
