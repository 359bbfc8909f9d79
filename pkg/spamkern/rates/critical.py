"""Localized complexity, critical univariate rate and theory-driven
regularization parameters."""
# License: GNU AGPLv3

from numbers import Integral, Real
from typing import NamedTuple

import numpy as np
from scipy.optimize import bisect

from ..exceptions import NoSolutionError
from ..utils.intervals import Interval
from ..utils.validation import validate_params

_LOWER_BRACKET = 1e-12
_MAX_BRACKET_DOUBLINGS = 64


class RegParams(NamedTuple):
    """Regularization parameters of the doubly-penalized estimator.

    Attributes
    ----------
    nu_n : float
        Critical univariate rate.

    gamma_n : float
        :math:`\\kappa \\max(\\nu_n, \\sqrt{\\log d / n})`.

    lambda_n : float
        Weight of the empirical-norm penalty, ``c_mult * gamma_n``.

    rho_n : float
        Weight of the Hilbert-norm penalty, ``c_mult * gamma_n ** 2``.

    kappa : float
        Scale constant in `gamma_n`.

    c_mult : float
        Penalty multiplier, at least 16.

    """
    nu_n: float
    gamma_n: float
    lambda_n: float
    rho_n: float
    kappa: float
    c_mult: float


def _complexity(t, eigenvalues, n):
    return np.sqrt(np.sum(np.minimum(t ** 2, eigenvalues))) / np.sqrt(n)


def q_sigma(t, kernel, n):
    """Localized kernel complexity :math:`Q_{\\sigma, n}(t) =
    n^{-1/2} \\sqrt{\\sum_k \\min(t^2, \\mu_k)}`.

    Parameters
    ----------
    t : float
        Nonnegative radius.

    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Univariate kernel whose eigenvalues enter the sum.

    n : int
        Sample size.

    Returns
    -------
    value : float

    Examples
    --------
    >>> from spamkern.kernels import make_finite_rank_kernel
    >>> from spamkern.rates import q_sigma
    >>> q_sigma(0.5, make_finite_rank_kernel(1), 100)
    0.05

    """
    _validate_radius(t, n)
    return float(_complexity(t, kernel.eigenvalues, n))


def empirical_q_sigma(t, spectrum, n):
    """Empirical analogue of :func:`q_sigma`, with the eigenvalues of the
    normalized Gram matrix ``spectrum / n`` in place of the population
    eigenvalues."""
    _validate_radius(t, n)
    spectrum = np.maximum(np.asarray(spectrum, dtype=np.float64), 0.)
    return float(_complexity(t, spectrum / n, n))


def _validate_radius(t, n):
    validate_params(
        {'t': t, 'n': n},
        {'t': {'type': Real, 'in': Interval(0, np.inf, closed='left')},
         'n': {'type': Integral, 'in': Interval(1, np.inf, closed='left')}})


def _solve_critical_inequality(eigenvalues, n, constant):
    """Smallest :math:`t > 0` with ``constant * t ** 2 >= Q(t)``.

    The function ``constant * t - Q(t) / t`` is increasing, so its sign
    change is unique and bisection applies.

    """
    eigenvalues = np.asarray(eigenvalues, dtype=np.float64)
    if not np.any(eigenvalues > 0):
        raise NoSolutionError("All eigenvalues are zero: the complexity is "
                              "identically 0 and no critical rate exists.")

    def excess(t):
        ratio = np.sqrt(np.sum(np.minimum(1., eigenvalues / t ** 2)) / n)
        return constant * t - ratio

    lower = _LOWER_BRACKET
    if excess(lower) >= 0:
        return lower
    upper = np.sqrt(np.max(eigenvalues)) + 1.
    for _ in range(_MAX_BRACKET_DOUBLINGS):
        if excess(upper) >= 0:
            break
        upper *= 2.
    else:
        raise NoSolutionError("Could not bracket the critical rate.")

    t = bisect(excess, lower, upper, xtol=1e-300, rtol=1e-12, maxiter=2000)
    # Move to the feasible side of the root.
    while excess(t) < 0:
        t *= 1. + 4e-12
    return float(t)


def critical_rate(kernel, n, constant=40.):
    """Critical univariate rate :math:`\\nu_n`, the smallest :math:`t > 0`
    with ``constant * t ** 2 >= q_sigma(t, kernel, n)``.

    Parameters
    ----------
    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Kernel with at least one positive eigenvalue.

    n : int
        Sample size.

    constant : float, optional, default: ``40.``
        Constant in the critical inequality. The empirical analogue
        customarily uses 4, see :func:`empirical_critical_rate`.

    Returns
    -------
    nu : float
        Root found by bisection on :math:`[10^{-12}, \\sqrt{\\mu_1} + 1]` to
        relative tolerance well below :math:`10^{-10}`, on the side where
        the inequality holds.

    Raises
    ------
    NoSolutionError
        If all eigenvalues vanish.

    Examples
    --------
    >>> from spamkern.kernels import make_finite_rank_kernel
    >>> from spamkern.rates import critical_rate
    >>> round(critical_rate(make_finite_rank_kernel(1), 1600), 10)
    0.000625

    """
    validate_params(
        {'n': n, 'constant': constant},
        {'n': {'type': Integral, 'in': Interval(1, np.inf, closed='left')},
         'constant': {'type': Real,
                      'in': Interval(0, np.inf, closed='neither')}})
    return _solve_critical_inequality(kernel.eigenvalues, n, constant)


def empirical_critical_rate(spectrum, n, constant=4.):
    """Critical rate of the empirical complexity
    :func:`empirical_q_sigma` computed from a Gram spectrum."""
    validate_params(
        {'n': n, 'constant': constant},
        {'n': {'type': Integral, 'in': Interval(1, np.inf, closed='left')},
         'constant': {'type': Real,
                      'in': Interval(0, np.inf, closed='neither')}})
    spectrum = np.maximum(np.asarray(spectrum, dtype=np.float64), 0.)
    return _solve_critical_inequality(spectrum / n, n, constant)


def make_reg_params(kernel, n, d, kappa=1., c_mult=16., constant=40.):
    """Theory-driven regularization parameters.

    Parameters
    ----------
    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Univariate kernel shared by all coordinates.

    n : int
        Sample size, at least 2.

    d : int
        Number of coordinates, at least 2.

    kappa : float, optional, default: ``1.``
        Positive scale constant.

    c_mult : float, optional, default: ``16.``
        Penalty multiplier, at least 16: :math:`\\lambda_n = c \\gamma_n`
        and :math:`\\rho_n = c \\gamma_n^2`.

    constant : float, optional, default: ``40.``
        Constant of the critical inequality, passed to
        :func:`critical_rate`.

    Returns
    -------
    params : :class:`RegParams`

    """
    validate_params(
        {'n': n, 'd': d, 'kappa': kappa, 'c_mult': c_mult},
        {'n': {'type': Integral, 'in': Interval(2, np.inf, closed='left')},
         'd': {'type': Integral, 'in': Interval(2, np.inf, closed='left')},
         'kappa': {'type': Real, 'in': Interval(0, np.inf, closed='neither')},
         'c_mult': {'type': Real, 'in': Interval(16, np.inf, closed='left')}})
    nu_n = critical_rate(kernel, n, constant=constant)
    gamma_n = kappa * max(nu_n, np.sqrt(np.log(d) / n))
    return RegParams(nu_n=nu_n, gamma_n=float(gamma_n),
                     lambda_n=float(c_mult * gamma_n),
                     rho_n=float(c_mult * gamma_n ** 2),
                     kappa=float(kappa), c_mult=float(c_mult))
