"""Exception types shared across the package."""


class HypintError(Exception):
    """Base class for all package-specific errors."""


class DomainError(HypintError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole (e.g. zeta at s = 1)."""


class UnsupportedParameter(HypintError, ValueError):
    """Parameter combination the closed forms do not cover."""


class UnsupportedDegree(UnsupportedParameter):
    """Alternating power sum requested beyond the implemented degrees."""


class ConsistencyError(HypintError, RuntimeError):
    """Two independent exact constructions of the same table disagree.

    This always signals an implementation bug, never a data problem.
    """


class NoConvergence(HypintError, RuntimeError):
    """Quadrature or series summation failed to reach the target error."""


class DivergentInput(DomainError):
    """A requested integral does not converge for the given parameters."""


class UnknownSuite(HypintError, KeyError):
    """Unregistered verification suite name."""
