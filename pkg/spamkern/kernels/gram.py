"""Empirical Gram matrices and their eigendecompositions."""
# License: GNU AGPLv3

from typing import NamedTuple

import numpy as np
from numpy.linalg import LinAlgError
from scipy.linalg import eigh

from ..exceptions import DecompositionError
from ..utils.validation import check_unit_interval
from .spectral import kernel_matrix


class GramFactor(NamedTuple):
    """Gram matrix :math:`K` on one coordinate together with an
    eigendecomposition :math:`K = U D U^\\top`.

    Attributes
    ----------
    matrix : ndarray of shape (n_samples, n_samples)
        Entries :math:`\\mathbb{K}(x_i, x_\\ell)`.

    orthonormal_factor : ndarray of shape (n_samples, n_samples)
        :math:`U`, with orthonormal columns.

    spectrum : ndarray of shape (n_samples,)
        Diagonal of :math:`D` in nonincreasing order, with negative
        roundoff clamped to 0.

    """
    matrix: np.ndarray
    orthonormal_factor: np.ndarray
    spectrum: np.ndarray

    @property
    def n_samples(self):
        return len(self.spectrum)

    def reconstruct(self):
        U = self.orthonormal_factor
        return (U * self.spectrum) @ U.T

    def positive_part(self, rtol=None):
        """Indices of spectrum entries that are numerically nonzero.

        The default tolerance is ``n_samples * eps * max(spectrum)``, the
        usual numerical rank cut-off.

        """
        if rtol is None:
            rtol = self.n_samples * np.finfo(np.float64).eps
        top = self.spectrum[0] if self.n_samples else 0.
        return np.flatnonzero(self.spectrum > rtol * top)


def gram_matrix(kernel, column):
    """Build and factor the Gram matrix of `kernel` on the sample `column`.

    Entries come from :func:`~spamkern.kernels.kernel_matrix` and coincide
    bit for bit with :func:`~spamkern.kernels.eval_kernel` at the same pair
    of points; the matrix is exactly symmetric.

    Parameters
    ----------
    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Univariate kernel.

    column : array-like of shape (n_samples,)
        One coordinate of the design, with entries in :math:`[0, 1]`.

    Returns
    -------
    factor : :class:`GramFactor`

    Raises
    ------
    DecompositionError
        If the symmetric eigensolver does not converge.

    Examples
    --------
    >>> import numpy as np
    >>> from spamkern.kernels import make_finite_rank_kernel, gram_matrix
    >>> factor = gram_matrix(make_finite_rank_kernel(1), [0., 0.3, 0.7])
    >>> bool(np.all(factor.spectrum[1:] <= 1e-8))
    True

    """
    column = check_unit_interval(column, name="column", ensure_2d=False)
    K = kernel_matrix(kernel, column, column)
    try:
        eigenvalues, eigenvectors = eigh(K, lower=True, check_finite=True)
    except (LinAlgError, ValueError) as e:
        raise DecompositionError(
            f"Eigendecomposition of the {len(column)}x{len(column)} Gram "
            f"matrix failed: {e}") from e
    order = np.arange(len(eigenvalues))[::-1]
    spectrum = np.maximum(eigenvalues[order], 0.)
    U = np.ascontiguousarray(eigenvectors[:, order])
    for array in (K, U, spectrum):
        array.setflags(write=False)
    return GramFactor(matrix=K, orthonormal_factor=U, spectrum=spectrum)
