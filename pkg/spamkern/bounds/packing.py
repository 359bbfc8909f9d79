"""Sparse codeword packings and the additive function families they
index."""
# License: GNU AGPLv3

import logging
from itertools import combinations, product
from numbers import Integral, Real
from typing import NamedTuple

import numpy as np
from scipy.special import gammaln

from ..exceptions import InsufficientFamilyError, PackingShortfallError
from ..utils._random import check_random_generator
from ..utils.intervals import Interval
from ..utils.validation import validate_params

logger = logging.getLogger(__name__)

_CANDIDATE_BUDGET = 10 ** 6

_positive_integer = {'type': Integral,
                     'in': Interval(1, np.inf, closed='left')}
_packing_references = {
    'd': _positive_integer,
    's': _positive_integer,
    'alphabet': _positive_integer,
    'max_size': _positive_integer
    }


class PackingSet(NamedTuple):
    """Set of sparse codewords with a guaranteed Hamming separation.

    Attributes
    ----------
    alphabet_size : int
        Number :math:`N` of nonzero symbols per coordinate.

    codewords : ndarray of int of shape (n_codewords, d)
        Codewords over :math:`\\{0, \\ldots, N\\}`, each with exactly `s`
        nonzero entries.

    min_distance : int
        Guaranteed pairwise Hamming distance :math:`\\lceil s/2 \\rceil`.

    """
    alphabet_size: int
    codewords: np.ndarray
    min_distance: int

    @property
    def sparsity(self):
        return int(np.count_nonzero(self.codewords[0])) \
            if len(self.codewords) else 0

    def __len__(self):
        return len(self.codewords)


def _check_sparsity(d, s, alphabet, even=False):
    validate_params({'d': d, 's': s, 'alphabet': alphabet},
                    _packing_references)
    if s > d:
        raise ValueError(f"`s` is {s}, which is larger than `d` = {d}.")
    if even and s % 2:
        raise ValueError(f"`s` must be even, {s} passed.")


def _log_binom(d, k):
    return gammaln(d + 1) - gammaln(k + 1) - gammaln(d - k + 1)


def log_n_star(d, s, alphabet):
    """Natural logarithm of :func:`n_star`, computed without forming the
    binomial coefficients."""
    _check_sparsity(d, s, alphabet, even=True)
    return float(
        -np.log(2) + _log_binom(d, s) - _log_binom(d, s // 2)
        + s * np.log(alphabet) - (s / 2) * np.log(alphabet + 1))


def n_star(d, s, alphabet):
    """Size up to which a greedy scan of all sparse codewords is guaranteed
    to extend a packing.

    .. math::
        N^* = \\frac{1}{2} \\frac{\\binom{d}{s}}{\\binom{d}{s/2}}
        \\frac{N^s}{(N + 1)^{s/2}}

    Parameters
    ----------
    d : int
        Length of the codewords.

    s : int
        Number of nonzero entries, even and at most `d`.

    alphabet : int
        Number :math:`N` of nonzero symbols.

    Returns
    -------
    value : float

    Examples
    --------
    >>> from spamkern.bounds import n_star
    >>> round(n_star(12, 2, 3), 10)
    12.375

    """
    return float(np.exp(log_n_star(d, s, alphabet)))


def n_star_lower_bound(d, s, alphabet):
    """Closed-form minorant :math:`\\frac{1}{2} \\big(\\frac{d - s}{s}
    \\big)^{s/2} \\big(\\frac{N^2}{N + 1}\\big)^{s/2}` of :func:`n_star`.

    It shows that :math:`\\log N^*` grows like :math:`s \\log(d/s) + s
    \\log N` once :math:`s \\leq d/4`.

    """
    _check_sparsity(d, s, alphabet, even=True)
    half = s // 2
    return 0.5 * ((d - s) / s) ** half * (alphabet ** 2 / (alphabet + 1)) \
        ** half


def packing_diameter_scale(delta, s):
    """Per-coordinate amplitude :math:`\\sqrt{8} \\delta / \\sqrt{s}`.

    Passing ``scale = sqrt(s) * packing_diameter_scale(delta, s)`` to
    :func:`packing_to_functions` gives functions at pairwise
    :math:`L^2` distances between :math:`\\delta` and :math:`8 \\delta`.

    """
    validate_params({'delta': delta, 's': s},
                    {'delta': {'type': Real,
                               'in': Interval(0, np.inf, closed='neither')},
                     's': _positive_integer})
    return float(np.sqrt(8.) * delta / np.sqrt(s))


def _candidates(d, s, alphabet, rng):
    """Yield codewords of the sparse code in random order, exhaustively
    when the code fits in the candidate budget."""
    supports = list(combinations(range(d), s)) \
        if _log_binom(d, s) + s * np.log(alphabet) \
        <= np.log(_CANDIDATE_BUDGET) else None
    if supports is not None:
        symbols = list(product(range(1, alphabet + 1), repeat=s))
        for index in rng.permutation(len(supports) * len(symbols)):
            support_index, symbol_index = divmod(int(index), len(symbols))
            codeword = np.zeros(d, dtype=np.int64)
            codeword[list(supports[support_index])] = symbols[symbol_index]
            yield codeword
    else:
        for _ in range(_CANDIDATE_BUDGET):
            codeword = np.zeros(d, dtype=np.int64)
            codeword[rng.choice(d, size=s, replace=False)] = \
                rng.integers(1, alphabet + 1, size=s)
            yield codeword


def greedy_packing(d, s, alphabet, max_size, random_state=None):
    """Greedily build a Hamming packing of the sparse code.

    Codewords of length `d` with exactly `s` entries in
    :math:`\\{1, \\ldots, N\\}` and zeros elsewhere are scanned in random
    order. A codeword is kept when its Hamming distance to every kept
    codeword is at least :math:`\\lceil s/2 \\rceil`. Codes of at most
    :math:`10^6` words are scanned exhaustively, larger ones through
    :math:`10^6` random draws.

    Parameters
    ----------
    d : int
        Length of the codewords.

    s : int
        Number of nonzero entries, at most `d`.

    alphabet : int
        Number :math:`N` of nonzero symbols.

    max_size : int
        The scan stops once this many codewords are kept.

    random_state : None, int or :class:`numpy.random.Generator`, optional, \
        default: ``None``
        Source of randomness of the scan order.

    Returns
    -------
    packing : :class:`PackingSet`

    Raises
    ------
    PackingShortfallError
        If `s` is even and fewer than ``min(max_size, floor(n_star(d, s,
        alphabet)))`` codewords are kept.

    """
    validate_params({'max_size': max_size},
                    {'max_size': _packing_references['max_size']})
    _check_sparsity(d, s, alphabet)
    rng = check_random_generator(random_state)
    min_distance = -(-s // 2)

    kept = np.empty((min(max_size, 1024), d), dtype=np.int64)
    size = 0
    for codeword in _candidates(d, s, alphabet, rng):
        if size and np.min(np.count_nonzero(kept[:size] != codeword,
                                            axis=1)) < min_distance:
            continue
        if size == len(kept):
            kept = np.concatenate([kept, np.empty_like(kept)])
        kept[size] = codeword
        size += 1
        if size == max_size:
            break

    if not s % 2:
        guaranteed = min(max_size, int(np.floor(n_star(d, s, alphabet))))
        if size < guaranteed:
            raise PackingShortfallError(
                f"Greedy packing kept {size} codewords, fewer than the "
                f"guaranteed {guaranteed}.")
    logger.debug("Packing with d=%d, s=%d, N=%d: %d codewords.", d, s,
                 alphabet, size)
    return PackingSet(alphabet_size=int(alphabet),
                      codewords=kept[:size].copy(),
                      min_distance=int(min_distance))


def pairwise_hamming(codewords):
    """Matrix of Hamming distances between the rows of `codewords`."""
    codewords = np.asarray(codewords)
    return np.stack([np.count_nonzero(codewords != row, axis=1)
                     for row in codewords]) if len(codewords) \
        else np.zeros((0, 0), dtype=np.int64)


def check_packing(packing, s=None):
    """Exhaustively verify the invariants of a :class:`PackingSet`.

    Every codeword must have exactly `s` nonzero symbols in
    :math:`\\{1, \\ldots, N\\}` and every pair must be at Hamming
    distance at least ``packing.min_distance``. `s` defaults to the
    sparsity of the first codeword.

    Returns
    -------
    valid : bool

    """
    codewords = packing.codewords
    if not len(codewords):
        return True
    s = packing.sparsity if s is None else s
    if np.any(np.count_nonzero(codewords, axis=1) != s) or \
            np.any((codewords < 0) | (codewords > packing.alphabet_size)):
        return False
    distances = pairwise_hamming(codewords)
    off_diagonal = distances[~np.eye(len(codewords), dtype=bool)]
    return bool(np.all(off_diagonal >= packing.min_distance))


def packing_to_functions(packing, kernel, scale):
    """Map each codeword to a sparse additive function.

    Symbol :math:`v \\geq 1` at coordinate :math:`j` becomes the component
    :math:`(\\mathrm{scale} / \\sqrt{s}) \\phi_v`, and symbol 0 the zero
    function. Distinct symbols give orthogonal components, so

    .. math::
        \\|g^u - g^v\\|_2^2 \\geq \\frac{\\mathrm{scale}^2}{s} \\rho_H(u, v).

    Parameters
    ----------
    packing : :class:`PackingSet`
        Packing of sparse codewords.

    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Kernel whose first `N` basis functions are used.

    scale : float
        Positive scale. Every component must stay in the unit Hilbert ball,
        that is :math:`\\mathrm{scale}^2 / s \\leq \\mu_N`.

    Returns
    -------
    coeffs : ndarray of shape (n_codewords, d, m_trunc)
        Basis coefficients of the functions.

    Raises
    ------
    InsufficientFamilyError
        If the kernel has fewer than `N` positive eigenvalues or the
        components leave the unit Hilbert ball.

    """
    validate_params({'scale': scale},
                    {'scale': {'type': Real,
                               'in': Interval(0, np.inf, closed='neither')}})
    n_symbols = packing.alphabet_size
    if n_symbols > kernel.rank:
        raise InsufficientFamilyError(
            f"Alphabet of size {n_symbols} needs as many basis directions "
            f"but the kernel has rank {kernel.rank}.")
    s = max(packing.sparsity, 1)
    amplitude = scale / np.sqrt(s)
    if amplitude ** 2 > kernel.eigenvalues[n_symbols - 1]:
        raise InsufficientFamilyError(
            f"Components of squared amplitude {amplitude ** 2:.6g} leave the "
            f"unit Hilbert ball since mu_{n_symbols} = "
            f"{kernel.eigenvalues[n_symbols - 1]:.6g}.")
    n_codewords, d = packing.codewords.shape
    coeffs = np.zeros((n_codewords, d, kernel.m_trunc))
    rows, columns = np.nonzero(packing.codewords)
    coeffs[rows, columns, packing.codewords[rows, columns] - 1] = amplitude
    return coeffs
