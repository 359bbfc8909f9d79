"""Exact minimization of one block of the doubly-penalized objective.

A block problem reads

    min  1/2 beta' diag(q) beta - c' beta + a ||D^{1/2} beta|| + b ||beta||
    s.t. ||beta|| <= 1,

with ``q``, ``D`` diagonal and nonnegative. Away from ``beta = 0`` its
solution has the form ``beta_i = c_i / (q_i + a d_i / t + b / r + theta)``
with ``t = ||D^{1/2} beta||``, ``r = ||beta||`` and ``theta`` the multiplier
of the ball. Each of ``t``, ``r`` and ``theta`` is a root of a monotone
scalar equation, and the three roots are nested.
"""
# License: GNU AGPLv3

from numbers import Real

import numpy as np
from scipy.optimize import brentq

from ..exceptions import DimensionMismatchError
from ..utils.intervals import Interval
from ..utils.validation import validate_params

_RTOL = 1e-14
_XTOL = 1e-300
_MAX_ITER = 500
_MAX_DOUBLINGS = 1000
_MAX_HALVINGS = 200
_ZERO_ATOL = 1e-12

_penalty_weight = {'type': Real, 'in': Interval(0, np.inf, closed='left')}


def _decreasing_root(func, lower, guess):
    """Root of a nonincreasing function with ``func(lower) > 0``, possibly
    ``+inf``. The upper end of the bracket is found by doubling `guess`."""
    upper = guess if np.isfinite(guess) and guess > lower else lower + 1.
    for _ in range(_MAX_DOUBLINGS):
        value = func(upper)
        if value <= 0:
            break
        upper *= 2.
    else:
        raise RuntimeError("Could not bracket the root of a scalar "
                           "equation.")
    if value == 0:
        return upper
    if not np.isfinite(func(lower)):
        left, right = lower, upper
        for _ in range(_MAX_HALVINGS):
            middle = 0.5 * (left + right)
            value = func(middle)
            if value <= 0:
                right = middle
            else:
                left = middle
                if np.isfinite(value):
                    break
        lower, upper = left, right
    return brentq(func, lower, upper, xtol=_XTOL, rtol=_RTOL,
                  maxiter=_MAX_ITER)


def _ellipsoid_distance(z, spectrum, a):
    """Distance from `z` to the ellipsoid ``{a D^{1/2} u : ||u|| <= 1}``.

    This is the trust-region least-squares problem ``min_{||u|| <= 1}
    ||z - a D^{1/2} u||``, solved through the multiplier ``mu`` of the
    constraint: ``u(mu) = a D^{1/2} z / (a^2 D + mu)``.

    """
    if a == 0:
        return float(np.linalg.norm(z))
    scales = a * np.sqrt(spectrum)
    positive = scales > 0
    null_residual = np.linalg.norm(z[~positive])
    z_pos, w = z[positive], scales[positive]
    if np.linalg.norm(z_pos / w) <= 1.:
        return float(null_residual)

    wz, w2 = w * z_pos, w ** 2

    def excess(mu):
        return np.linalg.norm(wz / (w2 + mu)) - 1.

    mu = _decreasing_root(excess, 0., np.linalg.norm(wz))
    residual = z_pos * mu / (w2 + mu)
    return float(np.hypot(np.linalg.norm(residual), null_residual))


def _block_objective(beta, c, quadratic, spectrum, a, b):
    return (0.5 * np.dot(quadratic * beta, beta) - np.dot(c, beta)
            + a * np.sqrt(np.dot(spectrum * beta, beta))
            + b * np.linalg.norm(beta))


def _weights_given_multipliers(c, quadratic, spectrum, a, diagonal_shift):
    """Minimizer of ``1/2 beta' diag(q + shift) beta - c' beta + a
    ||D^{1/2} beta||`` without constraint.

    Only the empirical-norm scale ``t`` is unknown: on directions with
    positive spectrum ``beta_i = c_i eta / (eta p_i + a d_i)``, where ``eta``
    solves ``sum d_i c_i^2 / (eta p_i + a d_i)^2 = 1``, or is 0 if the sum
    at ``eta = 0`` is at most 1.

    """
    p = quadratic + diagonal_shift
    beta = np.empty_like(c)
    positive = spectrum > 0 if a > 0 else np.zeros(len(c), dtype=bool)
    null = ~positive
    with np.errstate(divide='ignore', invalid='ignore'):
        beta[null] = np.where(c[null] == 0, 0., c[null] / p[null])
    if not np.any(positive):
        return beta

    c_pos, d_pos, p_pos = c[positive], spectrum[positive], p[positive]
    dc2 = d_pos * c_pos ** 2
    if np.sum(c_pos ** 2 / d_pos) <= a ** 2:
        beta[positive] = 0.
        return beta

    def excess(eta):
        return np.sqrt(np.sum(dc2 / (eta * p_pos + a * d_pos) ** 2)) - 1.

    with np.errstate(divide='ignore'):
        guess = np.sqrt(np.sum(dc2 / p_pos ** 2))
    eta = _decreasing_root(excess, 0., guess)
    beta[positive] = c_pos * eta / (eta * p_pos + a * d_pos)
    return beta


def _solve_block(c, quadratic, spectrum, a, b):
    """Exact minimizer of the block problem, assuming validated inputs."""
    if _ellipsoid_distance(c, spectrum, a) <= b + _ZERO_ATOL:
        return np.zeros_like(c)

    def solution(theta, b_over_r):
        return _weights_given_multipliers(c, quadratic, spectrum, a,
                                          theta + b_over_r)

    def norm(beta):
        value = np.linalg.norm(beta)
        return value if np.isfinite(value) else np.inf

    # The ball is active iff the problem without it has a solution of norm
    # larger than 1, which is decided at r = 1.
    b_over_r = b
    beta = solution(0., b_over_r)
    if norm(beta) <= 1.:
        if b > 0:
            def ratio_excess(r):
                return norm(solution(0., b / r)) / r - 1.

            upper = 1.
            lower = 0.5
            for _ in range(_MAX_HALVINGS):
                if ratio_excess(lower) > 0:
                    break
                upper, lower = lower, 0.5 * lower
            else:
                return np.zeros_like(c)
            r = brentq(ratio_excess, lower, upper, xtol=_XTOL, rtol=_RTOL,
                       maxiter=_MAX_ITER)
            beta = solution(0., b / r)
    else:
        theta = _decreasing_root(
            lambda theta: norm(solution(theta, b_over_r)) - 1., 0.,
            np.linalg.norm(c))
        beta = solution(theta, b_over_r)

    radius = np.linalg.norm(beta)
    if radius > 1.:
        beta = beta / radius
    return beta


def _check_block_inputs(z, spectrum, a, b):
    validate_params({'a': a, 'b': b}, {'a': _penalty_weight,
                                       'b': _penalty_weight})
    z = np.asarray(z, dtype=np.float64).ravel()
    spectrum = np.asarray(spectrum, dtype=np.float64).ravel()
    if z.shape != spectrum.shape:
        raise DimensionMismatchError(
            f"`z` has {len(z)} entries but `spectrum` has {len(spectrum)}.")
    if np.any(spectrum < 0):
        raise ValueError("`spectrum` must be nonnegative.")
    return z, spectrum


def zero_block_test(z, spectrum, a, b):
    """Check whether zero minimizes the block proximal problem.

    Zero is optimal iff :math:`\\min_{\\|u\\| \\leq 1} \\|z - a
    D^{1/2} u\\| \\leq b`. The inner minimum is found by root-finding on the
    Lagrange multiplier of the unit-ball constraint.

    Parameters
    ----------
    z : array-like of shape (n,)
        Point at which the proximal operator is evaluated.

    spectrum : array-like of shape (n,)
        Nonnegative diagonal of :math:`D`.

    a, b : float
        Nonnegative weights of the empirical-norm and Hilbert-norm terms.

    Returns
    -------
    is_zero : bool
        Ties within an absolute tolerance of 1e-12 count as zero.

    """
    z, spectrum = _check_block_inputs(z, spectrum, a, b)
    return bool(_ellipsoid_distance(z, spectrum, a) <= b + _ZERO_ATOL)


def block_prox(z, spectrum, a, b):
    """Proximal operator of the block penalty restricted to the unit ball.

    Returns :math:`\\arg\\min_{\\|\\beta\\| \\leq 1} \\frac{1}{2}\\|\\beta -
    z\\|^2 + a \\sqrt{\\beta^\\top D \\beta} + b \\|\\beta\\|`.

    Parameters
    ----------
    z : array-like of shape (n,)
        Input point.

    spectrum : array-like of shape (n,)
        Nonnegative diagonal of :math:`D`.

    a, b : float
        Nonnegative penalty weights.

    Returns
    -------
    beta : ndarray of shape (n,)
        Zero whenever :func:`zero_block_test` passes.

    Examples
    --------
    >>> import numpy as np
    >>> from spamkern.estimator import block_prox
    >>> np.round(block_prox([1.2, 1.6], [1., 1.], 0.5, 0.), 12)
    array([0.6, 0.8])

    """
    z, spectrum = _check_block_inputs(z, spectrum, a, b)
    return _solve_block(z, np.ones_like(z), spectrum, a, b)


def _block_kkt_distance(beta, gradient, spectrum, a, b, ball_tol=1e-10):
    """Distance from 0 to the subdifferential, in one block, of the full
    objective including the normal cone of the unit ball."""
    radius = np.linalg.norm(beta)
    if radius == 0:
        return max(0., _ellipsoid_distance(-gradient, spectrum, a) - b)
    w = gradient + b * beta / radius
    scale = np.sqrt(np.dot(spectrum * beta, beta))
    if a > 0 and scale > 0:
        w = w + a * spectrum * beta / scale
    if radius >= 1. - ball_tol:
        theta = max(0., -np.dot(w, beta) / radius ** 2)
        w = w + theta * beta
    if a > 0 and scale == 0:
        return _ellipsoid_distance(-w, spectrum, a)
    return float(np.linalg.norm(w))
