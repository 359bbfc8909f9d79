"""Monte Carlo checks of the localized complexity and of the equivalence
between empirical and population norms."""
# License: GNU AGPLv3

import logging
import warnings
from numbers import Integral, Real

import numpy as np
from joblib import Parallel, delayed, effective_n_jobs
from scipy.optimize import minimize_scalar
from sklearn.utils import gen_even_slices

from ..exceptions import DegenerateDrawError
from ..kernels import SpectralKernel, gram_matrix
from ..rates import critical_rate
from ..simulate import random_unit_ball_function
from ..utils._random import check_random_generator, spawn_generators
from ..utils.intervals import Interval
from ..utils.validation import check_unit_interval, validate_params

logger = logging.getLogger(__name__)

_WEIGHT_XTOL = 1e-12
_SPECTRUM_RTOL = 1e-12
_MAX_DRAWS = 1000

_complexity_references = {
    'kernel': {'type': SpectralKernel},
    't': {'type': Real, 'in': Interval(0, np.inf, closed='left')},
    'reps': {'type': Integral, 'in': Interval(30, np.inf, closed='left')},
    'noise': {'type': str, 'in': ['gaussian', 'rademacher']},
    'n_jobs': {'type': (Integral, type(None))}
    }

_sandwich_references = {
    'kernel': {'type': SpectralKernel},
    'n': {'type': Integral, 'in': Interval(1, np.inf, closed='left')},
    'trials': {'type': Integral, 'in': Interval(1, np.inf, closed='left')},
    't': {'type': Real, 'in': Interval(0, np.inf, closed='neither')},
    'n_jobs': {'type': (Integral, type(None))}
    }


def _combined_bound(omega, b_sq, scaled_spectrum, t):
    """Supremum of ``b' beta`` over the ellipsoid obtained by mixing the
    two constraints with weights ``1 - omega`` and ``omega``."""
    curvature = (1. - omega) + omega * scaled_spectrum
    radius_sq = (1. - omega) + omega * t ** 2
    return np.sqrt(radius_sq * np.sum(b_sq / curvature))


def _localized_supremum(b, scaled_spectrum, t):
    """Maximize ``b' beta`` subject to ``||beta|| <= 1`` and ``sum(
    scaled_spectrum * beta ** 2) <= t ** 2``.

    Returns the dual value and a feasible maximizer. `scaled_spectrum`
    must be positive.

    """
    if t == 0 or not np.any(b):
        return 0., np.zeros_like(b)
    b_sq = b ** 2
    candidates = [0., 1.]
    result = minimize_scalar(_combined_bound, bounds=(0., 1.),
                             args=(b_sq, scaled_spectrum, t),
                             method='bounded',
                             options={'xatol': _WEIGHT_XTOL})
    candidates.append(float(result.x))
    values = [_combined_bound(omega, b_sq, scaled_spectrum, t)
              for omega in candidates]
    omega = candidates[int(np.argmin(values))]
    dual = float(min(values))

    curvature = (1. - omega) + omega * scaled_spectrum
    beta = b / curvature
    beta *= np.sqrt(((1. - omega) + omega * t ** 2)
                    / np.sum(b_sq / curvature))
    shrink = min(1., 1. / np.linalg.norm(beta),
                 t / np.sqrt(np.dot(scaled_spectrum * beta, beta)))
    return dual, beta * shrink


def _suprema(noise_block, orthonormal_factor, spectrum, t):
    n = orthonormal_factor.shape[0]
    scaled_spectrum = spectrum / n
    values = np.empty(len(noise_block))
    for i, w in enumerate(noise_block):
        b = np.sqrt(spectrum) * (orthonormal_factor.T @ w) / n
        _, beta = _localized_supremum(b, scaled_spectrum, t)
        values[i] = np.dot(b, beta)
    return values


def gaussian_complexity_mc(kernel, column, t, reps=200, random_state=None,
                           noise='gaussian', n_jobs=None):
    """Monte Carlo estimate of the localized empirical complexity

    .. math::
        \\mathbb{E}_w \\sup \\Big\\{ \\frac{1}{n} \\sum_i w_i g(x_i) :
        \\|g\\|_{\\mathcal{H}} \\leq 1, \\|g\\|_n \\leq t \\Big\\}.

    Each supremum is over the coefficients of :math:`g` in the Gram
    eigenbasis and is solved through its one-dimensional dual over the
    weight given to each constraint.

    Parameters
    ----------
    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Univariate kernel.

    column : array-like of shape (n,)
        Sample points in :math:`[0, 1]`.

    t : float
        Nonnegative localization radius. ``0.`` gives 0.

    reps : int, optional, default: ``200``
        Number of Monte Carlo draws, at least 30.

    random_state : None, int or :class:`numpy.random.Generator`, optional, \
        default: ``None``
        Source of the weights :math:`w`.

    noise : ``'gaussian'`` | ``'rademacher'``, optional, default: \
        ``'gaussian'``
        Distribution of the weights. ``'rademacher'`` estimates the
        Rademacher complexity instead.

    n_jobs : int or None, optional, default: ``None``
        The number of jobs to use for the computation. ``None`` means 1
        unless in a :obj:`joblib.parallel_backend` context. ``-1`` means
        using all processors.

    Returns
    -------
    mean : float
        Monte Carlo mean.

    std_err : float
        Standard error of the mean.

    """
    validate_params({'kernel': kernel, 't': t, 'reps': reps, 'noise': noise,
                     'n_jobs': n_jobs}, _complexity_references)
    x = check_unit_interval(column, name="column", ensure_2d=False)
    if t == 0:
        return 0., 0.
    rng = check_random_generator(random_state)
    factor = gram_matrix(kernel, x)
    index = factor.positive_part(rtol=_SPECTRUM_RTOL)
    orthonormal_factor = factor.orthonormal_factor[:, index]
    spectrum = factor.spectrum[index]

    if noise == 'gaussian':
        weights = rng.standard_normal((reps, len(x)))
    else:
        weights = rng.choice([-1., 1.], size=(reps, len(x)))

    values = Parallel(n_jobs=n_jobs)(delayed(_suprema)(
        weights[s], orthonormal_factor, spectrum, t)
        for s in gen_even_slices(reps, effective_n_jobs(n_jobs)))
    values = np.concatenate(values)
    return float(values.mean()), float(values.std(ddof=1) / np.sqrt(reps))


def _draw_above(kernel, t, rng):
    """Function of unit Hilbert norm with :math:`\\|g\\|_2 \\geq t`, drawn
    by rejection from :func:`~spamkern.simulate.random_unit_ball_function`.
    """
    for _ in range(_MAX_DRAWS):
        coeffs = random_unit_ball_function(kernel, 1., rng)
        if np.linalg.norm(coeffs) >= t:
            return coeffs
    raise DegenerateDrawError(
        f"No function of unit Hilbert norm with L2 norm at least {t} was "
        f"drawn in {_MAX_DRAWS} attempts.")


def _sandwich_trial(kernel, n, t, rng):
    # The ratio of the two norms does not depend on the Hilbert radius, so
    # drawing on the unit sphere covers every radius in (0, 1].
    coeffs = _draw_above(kernel, t, rng)
    population_norm = np.linalg.norm(coeffs)
    values = kernel.features(rng.uniform(size=n)) @ coeffs
    empirical_norm = np.sqrt(np.mean(values ** 2))
    return 0.5 * population_norm <= empirical_norm <= 1.5 * population_norm


def sandwich_check(kernel, n, trials, t, random_state=None, n_jobs=None):
    """Frequency at which empirical and population norms agree up to a
    factor 2.

    Each trial draws a function :math:`g` of the Hilbert unit ball with
    :math:`\\|g\\|_2 \\geq t` and a fresh uniform sample of size `n`, and
    records whether :math:`\\frac{1}{2}\\|g\\|_2 \\leq
    \\|g\\|_n \\leq \\frac{3}{2}\\|g\\|_2`.

    Parameters
    ----------
    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Univariate kernel.

    n : int
        Sample size of each trial.

    trials : int
        Number of trials.

    t : float
        Positive lower bound on :math:`\\|g\\|_2`, at most
        :math:`\\sqrt{\\mu_1}`, the largest :math:`L^2` norm in the unit
        ball. Draws are rejected until they meet the bound, so larger
        values exclude rougher functions. Values below
        :func:`~spamkern.rates.critical_rate` trigger a warning.

    random_state : None, int or :class:`numpy.random.Generator`, optional, \
        default: ``None``
        Source of randomness. Every trial gets its own stream.

    n_jobs : int or None, optional, default: ``None``
        The number of jobs to use for the computation. ``None`` means 1
        unless in a :obj:`joblib.parallel_backend` context. ``-1`` means
        using all processors.

    Returns
    -------
    frequency : float
        Fraction of successful trials.

    Raises
    ------
    ValueError
        If `t` exceeds :math:`\\sqrt{\\mu_1}`.

    DegenerateDrawError
        If a trial draws no admissible function in 1000 attempts.

    """
    validate_params({'kernel': kernel, 'n': n, 'trials': trials, 't': t,
                     'n_jobs': n_jobs}, _sandwich_references)
    top = np.sqrt(kernel.eigenvalues[0])
    if t > top:
        raise ValueError(f"`t` = {t} exceeds {top:.6g}, the largest L2 norm "
                         f"of a function in the Hilbert unit ball.")
    critical = critical_rate(kernel, n)
    if t < critical:
        warnings.warn(f"`t` = {t} is below the critical rate {critical:.6g}, "
                      f"where the norm equivalence is not expected to hold.",
                      stacklevel=2)
    generators = spawn_generators(random_state, trials)
    successes = Parallel(n_jobs=n_jobs)(
        delayed(_sandwich_trial)(kernel, n, t, rng) for rng in generators)
    frequency = float(np.mean(successes))
    logger.debug("Sandwich check with n=%d, t=%.3g: frequency %.3f.", n, t,
                 frequency)
    return frequency
