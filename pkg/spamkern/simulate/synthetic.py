"""Synthetic data from the sparse additive observation model."""
# License: GNU AGPLv3

from numbers import Integral, Real
from typing import NamedTuple

import numpy as np

from ..exceptions import DegenerateDrawError, DimensionMismatchError
from ..kernels import SpectralKernel
from ..utils._random import check_random_generator
from ..utils.intervals import Interval
from ..utils.validation import check_unit_interval, validate_params

_spec_references = {
    'd': {'type': Integral, 'in': Interval(1, np.inf, closed='left')},
    's': {'type': Integral, 'in': Interval(1, np.inf, closed='left')},
    'n': {'type': Integral, 'in': Interval(1, np.inf, closed='left')},
    'kernel': {'type': SpectralKernel},
    'mu': {'type': Real},
    'noise_std': {'type': Real, 'in': Interval(0, np.inf, closed='left')},
    'signal_radius': {'type': Real, 'in': Interval(0, 1, closed='right')},
    'seed': {'type': Integral, 'in': Interval(0, 2 ** 64, closed='left')}
    }


class SyntheticSpec(NamedTuple):
    """Parameters of a synthetic sparse additive regression problem.

    Attributes
    ----------
    d : int
        Number of coordinates.

    s : int
        Number of active coordinates, at most `d`.

    n : int
        Number of samples.

    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Kernel whose Hilbert ball contains the true components.

    mu : float, default: ``0.``
        Global mean of the responses.

    noise_std : float, default: ``1.``
        Standard deviation of the Gaussian noise. ``0.`` gives noiseless
        responses.

    signal_radius : float, default: ``1.``
        Hilbert norm of every true component, in :math:`(0, 1]`.

    seed : int, default: ``0``
        Seed of the generator all draws come from.

    """
    d: int
    s: int
    n: int
    kernel: SpectralKernel
    mu: float = 0.
    noise_std: float = 1.
    signal_radius: float = 1.
    seed: int = 0


class Dataset(NamedTuple):
    """Sample drawn from a :class:`SyntheticSpec`.

    Attributes
    ----------
    design : ndarray of shape (n, d)
        Uniform covariates.

    responses : ndarray of shape (n,)
        :math:`y_i = \\mu + \\sum_{j \\in S} f^*_j(x_{ij}) + w_i`.

    support : tuple of int
        Sorted true support :math:`S`.

    truth_coeffs : ndarray of shape (d, m_trunc)
        Basis coefficients :math:`a_{jk}` of the true components, zero rows
        off the support.

    noise : ndarray of shape (n,)
        The noise :math:`w_i` added to the responses.

    mu : float

    noise_std : float

    """
    design: np.ndarray
    responses: np.ndarray
    support: tuple
    truth_coeffs: np.ndarray
    noise: np.ndarray
    mu: float
    noise_std: float


def random_unit_ball_function(kernel, radius=1., random_state=None):
    """Draw a random function on the sphere of radius `radius` of the
    Hilbert space of `kernel`.

    Independent standard normal :math:`g_k` are drawn, weighted into
    :math:`\\tilde a_k = \\mu_k g_k` and rescaled so that
    :math:`\\sum_k a_k^2 / \\mu_k = \\mathrm{radius}^2`.

    Parameters
    ----------
    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Kernel defining the Hilbert space.

    radius : float, optional, default: ``1.``
        Hilbert norm of the drawn function, in :math:`(0, 1]`.

    random_state : None, int or :class:`numpy.random.Generator`, optional, \
        default: ``None``
        Source of randomness.

    Returns
    -------
    coeffs : ndarray of shape (m_trunc,)
        Basis coefficients, zero where the eigenvalue vanishes.

    Raises
    ------
    DegenerateDrawError
        If two consecutive draws have zero norm.

    """
    validate_params({'radius': radius},
                    {'radius': _spec_references['signal_radius']})
    rng = check_random_generator(random_state)
    mu = kernel.eigenvalues
    for _ in range(2):
        g = rng.standard_normal(kernel.m_trunc)
        norm_sq = np.dot(mu, g ** 2)
        if norm_sq > 0:
            return mu * g * (radius / np.sqrt(norm_sq))
    raise DegenerateDrawError("Two consecutive draws of a random function "
                              "had zero Hilbert norm.")


def additive_values(coeffs, kernel, points):
    """Evaluate :math:`\\sum_j \\sum_k a_{jk} \\phi_k(z_j)` at each row of
    `points`.

    Parameters
    ----------
    coeffs : ndarray of shape (n_coordinates, m_trunc)
        Basis coefficients of the components.

    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Kernel providing the basis.

    points : array-like of shape (n_points, n_coordinates)
        Evaluation points in :math:`[0, 1]`.

    Returns
    -------
    values : ndarray of shape (n_points,)

    """
    Z = check_unit_interval(points, name="points")
    coeffs = np.asarray(coeffs, dtype=np.float64)
    if coeffs.shape != (Z.shape[1], kernel.m_trunc):
        raise DimensionMismatchError(
            f"`coeffs` has shape {coeffs.shape}, expected "
            f"{(Z.shape[1], kernel.m_trunc)}.")
    values = np.zeros(Z.shape[0])
    for j in np.flatnonzero(np.any(coeffs != 0, axis=1)):
        values += kernel.features(Z[:, j]) @ coeffs[j]
    return values


def generate(spec):
    """Draw a :class:`Dataset` from `spec`.

    The support is uniform among subsets of size ``spec.s``, the design
    is i.i.d. uniform on :math:`[0, 1]^d` and the noise is Gaussian. All
    draws come from a single generator seeded by ``spec.seed``, in the
    order support, components, design, noise, so equal specs give
    bit-identical datasets.

    Parameters
    ----------
    spec : :class:`SyntheticSpec`

    Returns
    -------
    dataset : :class:`Dataset`

    """
    validate_params(spec._asdict(), _spec_references)
    if spec.s > spec.d:
        raise ValueError(f"`s` is {spec.s}, which is larger than `d` = "
                         f"{spec.d}.")
    rng = np.random.default_rng(spec.seed)
    support = tuple(sorted(int(j) for j in
                           rng.choice(spec.d, size=spec.s, replace=False)))
    truth_coeffs = np.zeros((spec.d, spec.kernel.m_trunc))
    for j in support:
        truth_coeffs[j] = random_unit_ball_function(
            spec.kernel, spec.signal_radius, rng)
    design = rng.uniform(size=(spec.n, spec.d))
    noise = spec.noise_std * rng.standard_normal(spec.n)
    responses = spec.mu + additive_values(truth_coeffs, spec.kernel, design) \
        + noise
    return Dataset(design=design, responses=responses, support=support,
                   truth_coeffs=truth_coeffs, noise=noise,
                   mu=float(spec.mu), noise_std=float(spec.noise_std))
