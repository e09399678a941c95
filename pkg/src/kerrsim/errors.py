"""Exception types shared across the package."""


class KerrsimError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(KerrsimError, ValueError):
    """Invalid Fock-space dimension."""


class ParameterError(KerrsimError, ValueError):
    """Invalid physical parameter or argument."""


class TruncationError(KerrsimError, ValueError):
    """Truncated Hilbert space too small for the requested resonance."""


class ShapeError(KerrsimError, ValueError):
    """Array shape incompatible with the vectorization convention."""


class ContractViolation(KerrsimError, ValueError):
    """Input violates a structural requirement (hermiticity, trace, positivity)."""


class DegenerateSteadyStateError(KerrsimError, RuntimeError):
    """The Liouvillian null space is not one-dimensional."""


class SolverConvergenceError(KerrsimError, RuntimeError):
    """Iterative solver failed to reach the target residual."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class StaleSteadyStateError(KerrsimError, ValueError):
    """A state passed as the steady state does not satisfy L rho = 0."""


class WindowTooShortError(KerrsimError, ValueError):
    """Covariance window ends before the correlations have decayed."""
