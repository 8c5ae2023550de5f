"""Exception types shared across the package."""


class FFMZVError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(FFMZVError, ZeroDivisionError):
    """Inversion of zero in a field, or a zero denominator."""


class InsufficientPrecision(FFMZVError):
    """A truncated series does not carry enough coefficients for the request."""


class PrecisionTooExpensive(FFMZVError):
    """A brute-force enumeration would exceed the configured budget."""


class ReductionDiverged(FFMZVError):
    """Basis reduction ran past its iteration cap.

    Carries the trail of indices that were still outside the target set.
    """

    def __init__(self, message, trail=()):
        super().__init__(message)
        self.trail = tuple(trail)


class EmptyIndex(FFMZVError):
    """A head/tail operation was applied to the empty index."""


class NotAdmissible(FFMZVError):
    """A characteristic-zero value was requested outside its convergence domain."""


class InvalidInput(FFMZVError):
    """Structurally invalid input (mismatched dimensions, bad literals)."""
