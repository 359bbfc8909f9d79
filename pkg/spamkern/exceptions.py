"""Exceptions raised by ``spamkern``.

Every class subclasses a builtin exception so that callers may catch the
broad family (e.g. ``ValueError``) without importing this module."""
# License: GNU AGPLv3

from numpy.linalg import LinAlgError


class DomainError(ValueError):
    """Raised when a point lies outside the unit interval on which kernels
    are defined."""


class InfeasibleCoefficientError(ValueError):
    """Raised when a coefficient vector has mass on a direction where the
    kernel eigenvalue vanishes, so its Hilbert norm is infinite."""


class DimensionMismatchError(ValueError):
    """Raised when arrays passed together have incompatible shapes."""


class InsufficientDataError(ValueError):
    """Raised when too few distinct points are available for a fit."""


class InsufficientFamilyError(ValueError):
    """Raised when a univariate function family is too small for the
    requested alphabet."""


class ConfigError(ValueError):
    """Raised on an invalid experiment configuration."""


class NoSolutionError(ArithmeticError):
    """Raised when a scalar equation has no admissible root."""


class DecompositionError(LinAlgError):
    """Raised when a symmetric eigendecomposition fails to converge."""


class NotConvergedError(RuntimeError):
    """Raised when the block-coordinate solver exhausts its sweep budget.

    Parameters
    ----------
    message : str
        Diagnostic message.

    kkt_residual : float or None, optional, default: ``None``
        Residual reached when the solver stopped.

    sweeps_used : int or None, optional, default: ``None``
        Number of sweeps performed.

    """

    def __init__(self, message, kkt_residual=None, sweeps_used=None):
        super().__init__(message)
        self.kkt_residual = kkt_residual
        self.sweeps_used = sweeps_used


class DegenerateDrawError(RuntimeError):
    """Raised when a random draw produces a zero-norm function twice in a
    row."""


class PackingShortfallError(RuntimeError):
    """Raised when the greedy packing misses its guaranteed size."""
