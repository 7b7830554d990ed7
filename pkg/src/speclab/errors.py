"""Exception types shared across the package."""


class SpeclabError(Exception):
    """Base class for all errors raised by this package."""


class KernelSpecError(SpeclabError):
    """A kernel definition violates an invariant (asymmetry, negativity, shape)."""


class AdmissibilityError(SpeclabError):
    """Requested edge probabilities would exceed 1 somewhere."""


class InfeasibleDegreesError(SpeclabError):
    """Degree sequence cannot be matched by any soft configuration model."""

    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)


class ConvergenceError(SpeclabError):
    """An iterative solver exhausted its iteration budget."""

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations
