"""Univariate Mercer kernels defined by truncated eigen-expansions over a
mean-zero cosine basis of L²[0, 1]."""
# License: GNU AGPLv3

from numbers import Integral, Real

import numpy as np
from scipy.integrate import simpson

from ..exceptions import InfeasibleCoefficientError
from ..utils.intervals import Interval
from ..utils.validation import check_unit_interval, validate_params

_SQRT2 = np.sqrt(2.)
_SUP_GRID_SIZE = 10001
_CHUNK_SIZE = 2048
_PRODUCTS_PER_CHUNK = 2 ** 18


class SpectralKernel:
    """Univariate Mercer kernel given by a finite eigen-expansion.

    The kernel is :math:`\\mathbb{K}(x, y) = \\sum_{k=1}^M \\mu_k \\phi_k(x)
    \\phi_k(y)` on :math:`[0, 1]`, where :math:`\\phi_k(x) = \\sqrt{2}
    \\cos(2 \\pi k x)`. The basis is orthonormal and mean-zero under the
    uniform measure, and bounded by :math:`\\sqrt{2}`, so every function in
    the induced Hilbert space has zero mean and population norms can be
    computed exactly from basis coefficients.

    Instances are immutable and may be shared across threads and
    processes.

    Parameters
    ----------
    eigenvalues : array-like of shape (M,)
        Nonincreasing, nonnegative eigenvalues :math:`\\mu_1 \\geq \\mu_2
        \\geq \\ldots \\geq \\mu_M \\geq 0`.

    name : str or None, optional, default: ``None``
        Label used in representations and logs.

    Attributes
    ----------
    eigenvalues : ndarray of shape (M,)
        Read-only copy of the eigenvalues.

    m_trunc : int
        Number of retained eigenpairs :math:`M`.

    sup_basis : float
        Uniform bound on the basis functions, :math:`\\sqrt{2}`.

    See also
    --------
    make_sobolev_kernel, make_finite_rank_kernel, eval_kernel

    """

    def __init__(self, eigenvalues, name=None):
        eigenvalues = np.array(eigenvalues, dtype=np.float64, copy=True)
        if eigenvalues.ndim != 1 or not len(eigenvalues):
            raise ValueError("`eigenvalues` must be a nonempty 1D array.")
        if not np.all(np.isfinite(eigenvalues)):
            raise ValueError("`eigenvalues` must be finite.")
        if np.any(eigenvalues < 0):
            raise ValueError("`eigenvalues` must be nonnegative.")
        if np.any(np.diff(eigenvalues) > 0):
            raise ValueError("`eigenvalues` must be nonincreasing.")
        eigenvalues.setflags(write=False)
        self.eigenvalues = eigenvalues
        self.name = name
        self.sup_basis = _SQRT2

    @property
    def m_trunc(self):
        return len(self.eigenvalues)

    @property
    def rank(self):
        """Number of strictly positive eigenvalues."""
        return int(np.count_nonzero(self.eigenvalues > 0))

    def features(self, x):
        """Evaluate the basis at the points `x`.

        Parameters
        ----------
        x : array-like of shape (n_points,)
            Points in :math:`[0, 1]`.

        Returns
        -------
        Phi : ndarray of shape (n_points, m_trunc)
            ``Phi[i, k - 1]`` is :math:`\\phi_k(x_i)`.

        """
        x = np.asarray(x, dtype=np.float64)
        frequencies = np.arange(1, self.m_trunc + 1, dtype=np.float64)
        return _SQRT2 * np.cos(2. * np.pi * np.multiply.outer(x, frequencies))

    def check_basis(self, n_nodes=_SUP_GRID_SIZE, tol=1e-6):
        """Verify by Simpson quadrature that the basis is mean-zero and
        orthonormal.

        Parameters
        ----------
        n_nodes : int, optional, default: ``10001``
            Number of equispaced quadrature nodes on :math:`[0, 1]`. Must be
            odd.

        tol : float, optional, default: ``1e-6``
            Maximum admissible absolute deviation.

        Returns
        -------
        max_deviation : float
            Largest absolute deviation of the quadrature means from 0 and of
            the quadrature Gram matrix from the identity.

        Raises
        ------
        ValueError
            If `max_deviation` exceeds `tol`.

        """
        if n_nodes < 3 or not n_nodes % 2:
            raise ValueError(f"`n_nodes` must be an odd integer >= 3, "
                             f"{n_nodes} passed.")
        grid = np.linspace(0., 1., n_nodes)
        Phi = self.features(grid)
        max_deviation = np.max(np.abs(simpson(Phi, x=grid, axis=0)))
        identity = np.eye(self.m_trunc)
        for k in range(self.m_trunc):
            column = simpson(Phi * Phi[:, [k]], x=grid, axis=0)
            max_deviation = max(max_deviation,
                                np.max(np.abs(column - identity[k])))
        if max_deviation > tol:
            raise ValueError(
                f"Basis fails the quadrature check: deviation "
                f"{max_deviation:.3e} exceeds {tol:.1e}.")
        return max_deviation

    def __eq__(self, other):
        if not isinstance(other, SpectralKernel):
            return NotImplemented
        return np.array_equal(self.eigenvalues, other.eigenvalues)

    def __hash__(self):
        return hash(self.eigenvalues.tobytes())

    def __repr__(self):
        label = self.name if self.name is not None else "custom"
        return f"{type(self).__name__}({label}, m_trunc={self.m_trunc})"


def make_sobolev_kernel(alpha, m_trunc=1000, scale=1.):
    """Sobolev-type kernel with polynomially decaying eigenvalues
    :math:`\\mu_k = s k^{-2\\alpha}`, :math:`k = 1, \\ldots, M`.

    Truncation at the default :math:`M = 1000` leaves a tail
    :math:`\\sum_{k > M} k^{-2\\alpha} < 10^{-3}` for :math:`\\alpha \\geq
    1`.

    Parameters
    ----------
    alpha : float
        Smoothness, strictly larger than 1/2.

    m_trunc : int, optional, default: ``1000``
        Number of retained eigenpairs.

    scale : float, optional, default: ``1.``
        Common factor :math:`s > 0` of all eigenvalues. Scaling the kernel
        by :math:`s` multiplies Hilbert norms by :math:`s^{-1/2}`, hence
        enlarges the unit ball the estimator searches by :math:`\\sqrt{s}`
        in sup norm.

    Returns
    -------
    kernel : :class:`SpectralKernel`

    Examples
    --------
    >>> from spamkern.kernels import make_sobolev_kernel
    >>> make_sobolev_kernel(1, m_trunc=3).eigenvalues
    array([1.        , 0.25      , 0.11111111])

    """
    validate_params(
        {'alpha': alpha, 'm_trunc': m_trunc, 'scale': scale},
        {'alpha': {'type': Real, 'in': Interval(0.5, np.inf, closed='neither')},
         'm_trunc': {'type': Integral,
                     'in': Interval(1, np.inf, closed='left')},
         'scale': {'type': Real, 'in': Interval(0, np.inf, closed='neither')}})
    frequencies = np.arange(1, m_trunc + 1, dtype=np.float64)
    return SpectralKernel(scale * frequencies ** (-2. * alpha),
                          name=_scaled_name(f"sobolev(alpha={alpha})", scale))


def make_finite_rank_kernel(m, scale=1.):
    """Kernel of rank `m` with eigenvalues equal to `scale` on the first `m`
    cosine functions.

    Examples
    --------
    >>> from spamkern.kernels import make_finite_rank_kernel, eval_kernel
    >>> eval_kernel(make_finite_rank_kernel(2), 0., 0.)
    4.0

    """
    validate_params(
        {'m': m, 'scale': scale},
        {'m': {'type': Integral, 'in': Interval(1, np.inf, closed='left')},
         'scale': {'type': Real, 'in': Interval(0, np.inf, closed='neither')}})
    return SpectralKernel(np.full(m, float(scale)),
                          name=_scaled_name(f"finite-rank(m={m})", scale))


def _scaled_name(name, scale):
    return name if scale == 1 else f"{name[:-1]}, scale={scale})"


def _feature_rows(kernel, points):
    # One call per point keeps every row of basis values independent of how
    # many points are evaluated together.
    frequencies = np.arange(1, kernel.m_trunc + 1, dtype=np.float64)
    rows = np.empty((len(points), kernel.m_trunc))
    for i, point in enumerate(points):
        rows[i] = _SQRT2 * np.cos(2. * np.pi * (point * frequencies))
    return rows


def kernel_matrix(kernel, x, y):
    """Matrix of kernel values :math:`\\mathbb{K}(x_i, y_\\ell)` computed
    from the truncated Mercer sum. Inputs are assumed validated.

    Every entry is the contiguous sum over :math:`k` of the products
    :math:`(\\phi_k(x_i) \\phi_k(y_\\ell)) \\mu_k`, so it is bitwise
    symmetric and equal to :func:`eval_kernel` at the same pair, whatever
    the shapes of `x` and `y`. Rows are processed in chunks to bound
    memory.

    """
    x = np.asarray(x, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    Phi_x = _feature_rows(kernel, x)
    Phi_y = _feature_rows(kernel, y)
    K = np.empty((len(x), len(y)))
    step = max(1, _PRODUCTS_PER_CHUNK // max(1, len(y) * kernel.m_trunc))
    for start in range(0, len(x), step):
        products = Phi_x[start:start + step, None, :] * Phi_y[None, :, :]
        products *= kernel.eigenvalues
        K[start:start + step] = np.sum(products, axis=-1)
    return K


def eval_kernel(kernel, x, y):
    """Evaluate the kernel at a pair of points.

    Parameters
    ----------
    kernel : :class:`SpectralKernel`
        Kernel to evaluate.

    x, y : float
        Points of :math:`[0, 1]`.

    Returns
    -------
    value : float
        :math:`\\sum_k \\mu_k \\phi_k(x) \\phi_k(y)`, obtained from
        :func:`kernel_matrix` on the pair and hence equal bit for bit to the
        corresponding Gram matrix entry.

    Raises
    ------
    DomainError
        If `x` or `y` lies outside :math:`[0, 1]`.

    """
    points = check_unit_interval([x, y], name="(x, y)", ensure_2d=False)
    return float(kernel_matrix(kernel, points[:1], points[1:])[0, 0])


def hilbert_norm_sq(coeffs, kernel):
    """Squared Hilbert norm :math:`\\sum_k a_k^2 / \\mu_k` of the function
    with basis coefficients `coeffs`.

    Coefficients beyond the truncation level are treated as sitting on
    zero eigenvalues.

    Parameters
    ----------
    coeffs : array-like of shape (n_coeffs,)
        Basis coefficients :math:`a_k`.

    kernel : :class:`SpectralKernel`
        Kernel defining the Hilbert space.

    Returns
    -------
    norm_sq : float

    Raises
    ------
    InfeasibleCoefficientError
        If some :math:`a_k \\neq 0` where :math:`\\mu_k = 0`.

    """
    coeffs = np.asarray(coeffs, dtype=np.float64).ravel()
    eigenvalues = np.zeros(max(len(coeffs), kernel.m_trunc))
    eigenvalues[:kernel.m_trunc] = kernel.eigenvalues
    eigenvalues = eigenvalues[:len(coeffs)]
    null = eigenvalues == 0
    if np.any(coeffs[null] != 0):
        raise InfeasibleCoefficientError(
            f"Coefficients {np.flatnonzero(null & (coeffs != 0)).tolist()} "
            f"are nonzero on zero eigenvalues; the Hilbert norm is "
            f"infinite.")
    positive = ~null
    return float(np.sum(coeffs[positive] ** 2 / eigenvalues[positive]))


def kernel_sup_bound(kernel):
    """Grid estimate of :math:`\\sup_x \\sqrt{\\mathbb{K}(x, x)}`.

    This is the constant :math:`c` such that :math:`\\|f\\|_\\infty \\leq c
    \\|f\\|_{\\mathcal{H}}`. The maximum is taken over 10001 equispaced
    points and no claim is made between grid points.

    """
    grid = np.linspace(0., 1., _SUP_GRID_SIZE)
    diagonal = np.concatenate([
        kernel.features(chunk) ** 2 @ kernel.eigenvalues
        for chunk in np.array_split(grid, _SUP_GRID_SIZE // _CHUNK_SIZE + 1)
        ])
    return float(np.sqrt(np.max(diagonal)))
