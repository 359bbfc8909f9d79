"""Closed-form rate expressions for sparse additive models.

All unspecified universal constants are set to 1. The expressions are
comparators for slopes and ratios, not absolute error bounds.
"""
# License: GNU AGPLv3

from numbers import Integral, Real

import numpy as np

from ..utils.intervals import Interval
from ..utils.validation import validate_params
from .critical import critical_rate

_positive_int = {'type': Integral, 'in': Interval(1, np.inf, closed='left')}
_smoothness = {'type': Real, 'in': Interval(0.5, np.inf, closed='neither')}
_bound = {'type': Real, 'in': Interval(0, np.inf, closed='left')}


def _validate_sizes(s, d, n, min_s=1, max_s_ratio=1.):
    validate_params({'s': s, 'd': d, 'n': n},
                    {'s': _positive_int, 'd': _positive_int,
                     'n': _positive_int})
    if s < min_s:
        raise ValueError(f"`s` must be at least {min_s}, {s} passed.")
    if s > max_s_ratio * d:
        raise ValueError(f"`s` must be at most {max_s_ratio:g} * d = "
                         f"{max_s_ratio * d:g}, {s} passed.")


def upper_rate(s, d, n, kernel):
    """Upper rate :math:`s \\log d / n + s \\nu_n^2`: a subset selection
    term plus `s` univariate estimation terms.

    Examples
    --------
    >>> import numpy as np
    >>> from spamkern.kernels import make_finite_rank_kernel
    >>> from spamkern.rates import upper_rate
    >>> round(upper_rate(1, np.e, 100, make_finite_rank_kernel(1)), 10)
    0.01000625

    """
    if isinstance(d, Real) and not isinstance(d, Integral):
        # Real dimensions only enter through log d.
        validate_params({'s': s, 'n': n},
                        {'s': _positive_int, 'n': _positive_int})
        if not 1 <= s <= d:
            raise ValueError(f"`s` must lie in [1, d], {s} passed.")
    else:
        _validate_sizes(s, d, n)
    nu_n = critical_rate(kernel, n)
    return float(s * np.log(d) / n + s * nu_n ** 2)


def lower_rate_logarithmic(s, d, n, m):
    """Minimax lower rate :math:`s \\log(d/s) / n + s m / n` for kernels of
    rank `m`.

    Raises
    ------
    ValueError
        If :math:`s > d / 4`.

    """
    _validate_sizes(s, d, n, max_s_ratio=0.25)
    validate_params({'m': m}, {'m': {'type': Integral,
                                     'in': Interval(0, np.inf,
                                                    closed='left')}})
    return float(s * np.log(d / s) / n + s * m / n)


def lower_rate_polynomial(s, d, n, alpha):
    """Minimax lower rate :math:`s \\log(d/s) / n + s n^{-2\\alpha /
    (2\\alpha + 1)}` for kernels with eigenvalue decay
    :math:`k^{-2\\alpha}`."""
    _validate_sizes(s, d, n, max_s_ratio=0.25)
    validate_params({'alpha': alpha}, {'alpha': _smoothness})
    return float(s * np.log(d / s) / n
                 + s * n ** (-2. * alpha / (2. * alpha + 1.)))


def delta_n(s, d, n, alpha, bound_b):
    """Rate :math:`\\max\\left(\\sqrt{s \\log(d/s) / n},\\, \\sqrt{B}
    (s^{1/\\alpha} \\log s / n)^{1/4}\\right)` appearing in bounds over
    globally bounded classes. Requires :math:`2 \\leq s \\leq d`, since the
    second term degenerates at :math:`s = 1`."""
    _validate_sizes(s, d, n, min_s=2)
    validate_params({'alpha': alpha, 'bound_b': bound_b},
                    {'alpha': _smoothness, 'bound_b': _bound})
    subset_term = np.sqrt(s * np.log(d / s) / n)
    bounded_term = np.sqrt(bound_b) \
        * (s ** (1. / alpha) * np.log(s) / n) ** 0.25
    return float(max(subset_term, bounded_term))


def k_bound(s, n, alpha, bound_b):
    """Function :math:`K_B(s, n) = B \\sqrt{\\log s}\\, (s^{-1/(2\\alpha)}
    n^{1/(4\\alpha + 2)})^{2\\alpha - 1}`.

    Examples
    --------
    >>> from spamkern.rates import k_bound
    >>> round(k_bound(100, 10 ** 4, 1, 1.), 4)
    0.9961

    """
    validate_params({'s': s, 'n': n, 'alpha': alpha, 'bound_b': bound_b},
                    {'s': _positive_int, 'n': _positive_int,
                     'alpha': _smoothness, 'bound_b': _bound})
    if s < 2:
        raise ValueError(f"`s` must be at least 2, {s} passed.")
    base = s ** (-1. / (2. * alpha)) * n ** (1. / (4. * alpha + 2.))
    return float(bound_b * np.sqrt(np.log(s)) * base ** (2. * alpha - 1.))


def _bounded_terms(s, d, n, alpha, bound_b, k_value):
    _validate_sizes(s, d, n, min_s=2)
    if k_value is None:
        k_value = k_bound(s, n, alpha, bound_b)
    else:
        validate_params({'alpha': alpha, 'bound_b': bound_b},
                        {'alpha': _smoothness, 'bound_b': _bound})
    subset_term = n ** (-1. / (2. * alpha + 1.)) * np.log(d / s)
    return k_value, subset_term


def bounded_class_rate(s, d, n, alpha, bound_b, k_value=None):
    """Rate over globally bounded Sobolev classes,
    :math:`(1 + B)\\, s\\, n^{-2\\alpha/(2\\alpha+1)} (K_B(s, n) +
    n^{-1/(2\\alpha+1)} \\log(d/s))`.

    Parameters
    ----------
    s, d, n : int
        Sparsity, dimension and sample size, with :math:`2 \\leq s \\leq
        d`.

    alpha : float
        Smoothness.

    bound_b : float
        Global sup-norm bound :math:`B`.

    k_value : float or None, optional, default: ``None``
        Value used for :math:`K_B(s, n)`. ``None`` means :func:`k_bound`.

    Returns
    -------
    rate : float

    """
    k_value, subset_term = _bounded_terms(s, d, n, alpha, bound_b, k_value)
    return float((1. + bound_b) * s * n ** (-2. * alpha / (2. * alpha + 1.))
                 * (k_value + subset_term))


def rate_ratio(s, d, n, alpha, bound_b, k_value=None):
    """Ratio of the polynomial lower rate to :func:`bounded_class_rate`,
    :math:`(1 + n^{-1/(2\\alpha+1)} \\log(d/s)) / ((1 + B)(K_B(s, n) +
    n^{-1/(2\\alpha+1)} \\log(d/s)))`.

    A ratio growing with `n` shows that global boundedness yields strictly
    faster rates.

    """
    k_value, subset_term = _bounded_terms(s, d, n, alpha, bound_b, k_value)
    return float((1. + subset_term)
                 / ((1. + bound_b) * (k_value + subset_term)))
