"""Fano lower bound on the error probability of multiple testing over a
packing."""
# License: GNU AGPLv3

from numbers import Integral, Real

import numpy as np

from ..utils.intervals import Interval
from ..utils.validation import validate_params

_FANO_CONSTANT = 32.

_fano_references = {
    'n': {'type': Integral, 'in': Interval(1, np.inf, closed='left')},
    'delta': {'type': Real, 'in': Interval(0, np.inf, closed='left')},
    'log_m': {'type': Real, 'in': Interval(0, np.inf, closed='neither')},
    'error_prob': {'type': Real, 'in': Interval(0, 1, closed='neither')}
    }


def fano_bound(n, delta, log_m):
    """Fano lower bound on the probability of misidentifying a member of
    a packing of size :math:`M` from `n` samples.

    When all members lie at pairwise :math:`L^2` distance at most
    :math:`8 \\delta`, the mutual information between the index and the
    sample is at most :math:`32 n \\delta^2`, and

    .. math::
        \\mathbb{P}[\\mathrm{error}] \\geq \\max\\Big(0, 1 - \\frac{32 n
        \\delta^2 + \\log 2}{\\log M}\\Big).

    Parameters
    ----------
    n : int
        Sample size.

    delta : float
        Nonnegative separation scale.

    log_m : float
        Positive log-cardinality of the packing.

    Returns
    -------
    bound : float
        Value in :math:`[0, 1]`.

    Examples
    --------
    >>> from spamkern.bounds import fano_bound
    >>> round(fano_bound(100, 0.01, 10.), 5)
    0.89869

    """
    validate_params({'n': n, 'delta': delta, 'log_m': log_m},
                    _fano_references)
    return float(max(0., 1. - (_FANO_CONSTANT * n * delta ** 2 + np.log(2))
                     / log_m))


def fano_critical_delta(n, log_m, error_prob=0.75):
    """Largest :math:`\\delta` at which :func:`fano_bound` still reaches
    `error_prob`, or 0 when no :math:`\\delta` does."""
    validate_params({'n': n, 'log_m': log_m, 'error_prob': error_prob},
                    _fano_references)
    excess = (1. - error_prob) * log_m - np.log(2)
    if excess <= 0:
        return 0.
    return float(np.sqrt(excess / (_FANO_CONSTANT * n)))
