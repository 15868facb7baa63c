"""Exception hierarchy shared across the package."""


class SteerMubError(Exception):
    """Base class for all package errors."""


class StateValidationError(SteerMubError, ValueError):
    """A matrix failed one of the density-matrix invariants.

    ``magnitude`` holds the measured size of the violation.
    """

    invariant = "density matrix"

    def __init__(self, magnitude, detail=""):
        self.magnitude = float(magnitude)
        msg = f"{self.invariant} violated (magnitude {self.magnitude:.3e})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotHermitian(StateValidationError):
    invariant = "Hermiticity"


class TraceNotOne(StateValidationError):
    invariant = "unit trace"


class NotPositiveSemidefinite(StateValidationError):
    invariant = "positive semidefiniteness"


class OutOfRange(SteerMubError, ValueError):
    pass


class OutOfDomain(SteerMubError, ValueError):
    pass


class DomainError(SteerMubError, ValueError):
    pass


class ZeroVector(SteerMubError, ValueError):
    pass


class NotUnbiased(SteerMubError, ValueError):
    pass


class ParseError(SteerMubError, ValueError):
    pass


class ConvergenceFailure(SteerMubError, RuntimeError):
    """Multi-start optimisation did not reproduce its best value."""

    def __init__(self, message, best=None, values=None):
        super().__init__(message)
        self.best = best
        self.values = values


class MonotonicityViolation(SteerMubError, AssertionError):
    def __init__(self, message, points=()):
        super().__init__(message)
        self.points = list(points)
