"""Exception types shared across the package."""


class IdealTutteError(Exception):
    """Base class for all package errors."""


class ConstraintError(IdealTutteError, ValueError):
    """An input violates a documented constraint (rank bounds, bad ideal spec, ...)."""


class UnsupportedTypeError(IdealTutteError, ValueError):
    """The requested operation is not defined for this root-system family."""


class GuardExceeded(IdealTutteError, RuntimeError):
    """A combinatorial size guard refused to start a computation."""


class InconsistencyError(IdealTutteError, ArithmeticError):
    """An exactness invariant failed (nonzero remainder, non-integral division, ...).

    This always signals a bug upstream of the raising operation, never a
    recoverable condition.
    """


class VerificationMismatch(IdealTutteError, AssertionError):
    """Two engines disagreed on a polynomial they should both compute exactly."""
