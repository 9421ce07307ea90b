"""Exception types shared across the library."""


class DirichletRkhsError(Exception):
    """Base class for all library errors."""


class DomainError(DirichletRkhsError):
    """Input lies outside the mathematical domain of the operation."""


class PoleError(DirichletRkhsError):
    """Evaluation requested within the guard radius of a pole."""


class ConvergenceError(DirichletRkhsError):
    """An iterative or truncated method could not meet its error target."""


class NumericalError(DirichletRkhsError):
    """A computed quantity violates a structural expectation (sign, residue)."""


class IllConditionedError(NumericalError):
    """A linear system is too close to singular to solve reliably."""


class SizeError(DirichletRkhsError):
    """Input size is outside the supported range."""


class ExhaustionError(DirichletRkhsError):
    """A bounded search ran out of candidates."""
