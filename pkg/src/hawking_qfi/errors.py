"""Exception types raised across the package."""


class QfiError(Exception):
    """Base class for all package errors."""


class DimensionError(QfiError, ValueError):
    pass


class NotHermitianError(QfiError, ValueError):
    pass


class ConvergenceError(QfiError, RuntimeError):
    """Eigensolver ran out of sweeps. ``matrix`` holds the offending input."""

    def __init__(self, message, matrix=None):
        super().__init__(message)
        self.matrix = matrix


class ParameterDomainError(QfiError, ValueError):
    """A parameter lies outside the domain of a formula.

    ``term`` names the offending parameter or sub-expression.
    """

    def __init__(self, message, term=None):
        super().__init__(message)
        self.term = term


class UnphysicalError(ParameterDomainError):
    """A derived channel coefficient left [0, 1]."""


class DegenerateSpectrumError(QfiError, ValueError):
    pass


class GaugeError(QfiError, ValueError):
    pass


class NegativeQfiError(QfiError, ArithmeticError):
    pass
