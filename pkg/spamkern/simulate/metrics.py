"""Population and empirical errors of fitted additive models against a
known truth."""
# License: GNU AGPLv3

from numbers import Real

import numpy as np

from ..estimator import population_coefficients, predict
from ..exceptions import DimensionMismatchError
from ..utils.intervals import Interval
from ..utils.validation import validate_params
from .synthetic import additive_values


def _check_dataset(fit, dataset):
    if fit.dual_weights.shape != dataset.design.shape[::-1]:
        raise DimensionMismatchError(
            f"Fit has weights of shape {fit.dual_weights.shape} while the "
            f"dataset design has shape {dataset.design.shape}.")


def l2p_error_exact(fit, dataset, kernel, train_design=None):
    """Squared population error :math:`\\|\\hat f - f^*\\|_2^2` of the
    centered fit.

    Both functions lie in the span of the first ``kernel.m_trunc`` basis
    functions, so the error is the squared Euclidean distance between the
    fitted coefficients :math:`\\hat a_{jk} = \\mu_k \\sum_i \\alpha_{ij}
    \\phi_k(x_{ij})` and the true ones. The intercept is excluded.

    Parameters
    ----------
    fit : :class:`~spamkern.estimator.AdditiveFit`
        Fitted model.

    dataset : :class:`~spamkern.simulate.Dataset`
        Dataset holding the truth.

    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Kernel used for fitting and for the truth.

    train_design : array-like or None, optional, default: ``None``
        Design the fit was computed on. ``None`` means ``dataset.design``.

    Returns
    -------
    error : float

    """
    design = dataset.design if train_design is None else train_design
    coeffs = population_coefficients(fit, kernel, design)
    if coeffs.shape != dataset.truth_coeffs.shape:
        raise DimensionMismatchError(
            f"Fitted coefficients have shape {coeffs.shape}, true "
            f"coefficients {dataset.truth_coeffs.shape}.")
    return float(np.sum((coeffs - dataset.truth_coeffs) ** 2))


def l2pn_error(fit, dataset, kernel):
    """Squared empirical error :math:`\\frac{1}{n} \\sum_i (\\hat f(x_i) -
    f^*(x_i))^2` on the design of `dataset`, intercept excluded."""
    _check_dataset(fit, dataset)
    fitted = predict(fit, kernel, dataset.design, dataset.design) \
        - fit.intercept
    truth = additive_values(dataset.truth_coeffs, kernel, dataset.design)
    return float(np.mean((fitted - truth) ** 2))


def support_recovery(fit, dataset, threshold=0.):
    """Precision and recall of the estimated support.

    The estimated support is :math:`\\{j : \\|\\hat f_j\\|_n >
    \\mathrm{threshold}\\}`. Precision is 1 when the estimated support is
    empty, and recall is 1 when the true support is empty.

    Parameters
    ----------
    fit : :class:`~spamkern.estimator.AdditiveFit`
        Fitted model.

    dataset : :class:`~spamkern.simulate.Dataset`
        Dataset holding the true support.

    threshold : float, optional, default: ``0.``
        Nonnegative threshold on the empirical norms, possibly
        ``numpy.inf``.

    Returns
    -------
    precision : float

    recall : float

    """
    validate_params({'threshold': threshold},
                    {'threshold': {'type': Real,
                                   'in': Interval(0, np.inf, closed='both')}})
    if len(fit.empirical_norms) != dataset.design.shape[1]:
        raise DimensionMismatchError(
            f"Fit has {len(fit.empirical_norms)} coordinates, the dataset "
            f"has {dataset.design.shape[1]}.")
    predicted = set(np.flatnonzero(fit.empirical_norms > threshold).tolist())
    truth = set(dataset.support)
    hits = len(predicted & truth)
    precision = hits / len(predicted) if predicted else 1.
    recall = hits / len(truth) if truth else 1.
    return float(precision), float(recall)
