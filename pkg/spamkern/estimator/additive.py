"""Doubly-penalized kernel estimator for sparse additive models, solved by
cyclic block-coordinate minimization in the Gram eigenbases."""
# License: GNU AGPLv3

import logging
import warnings
from numbers import Integral, Real
from typing import NamedTuple

import numpy as np
from scipy.linalg import lstsq

from ..exceptions import DimensionMismatchError, InsufficientDataError, \
    NotConvergedError
from ..kernels import gram_matrix
from ..utils.intervals import Interval
from ..utils.validation import check_responses, check_unit_interval, \
    validate_params
from ._prox import _block_kkt_distance, _block_objective, _solve_block

logger = logging.getLogger(__name__)

_SPECTRUM_RTOL = 1e-12
_MONOTONE_SLACK = 1e-12
_STALL_PATIENCE = 5

_solver_references = {
    'max_sweeps': {'type': Integral, 'in': Interval(1, np.inf,
                                                    closed='left')},
    'kkt_tol': {'type': Real, 'in': Interval(0, np.inf, closed='neither')},
    'objective_tol': {'type': Real, 'in': Interval(0, np.inf,
                                                   closed='neither')}
    }


class SolverOptions(NamedTuple):
    """Stopping rules of the block-coordinate solver.

    Attributes
    ----------
    max_sweeps : int, default: ``10000``
        Maximum number of passes over the coordinates.

    kkt_tol : float, default: ``1e-6``
        Convergence is declared once the KKT residual is below this value.

    objective_tol : float, default: ``1e-12``
        Relative per-sweep decrease under which the solver is considered
        stalled.

    """
    max_sweeps: int = 10000
    kkt_tol: float = 1e-6
    objective_tol: float = 1e-12


class AdditiveFit(NamedTuple):
    """Fitted sparse additive model.

    Attributes
    ----------
    intercept : float
        Sample mean of the responses.

    block_weights : ndarray of shape (n_coordinates, n_samples)
        Row ``j`` is :math:`\\beta_j = D_j^{1/2} U_j^\\top \\alpha_j` in the
        eigenbasis of the Gram matrix of coordinate ``j``.

    dual_weights : ndarray of shape (n_coordinates, n_samples)
        Representer weights :math:`\\alpha_j`.

    active_set : tuple of int
        Coordinates with nonzero block weights.

    objective : float
        Value of the penalized objective at the solution.

    kkt_residual : float
        Largest distance from 0 to a block subdifferential.

    sweeps_used : int
        Number of sweeps performed.

    empirical_norms : ndarray of shape (n_coordinates,)
        :math:`\\|\\hat f_j\\|_n`.

    hilbert_norms : ndarray of shape (n_coordinates,)
        :math:`\\|\\hat f_j\\|_{\\mathcal{H}}`.

    objective_path : tuple of float
        Objective after each sweep.

    hilbert_norm_path : tuple of float
        Largest block Hilbert norm :math:`\\max_j \\|\\beta_j\\|` after
        each sweep. Every entry is at most 1 up to rounding.

    converged : bool

    """
    intercept: float
    block_weights: np.ndarray
    dual_weights: np.ndarray
    active_set: tuple
    objective: float
    kkt_residual: float
    sweeps_used: int
    empirical_norms: np.ndarray
    hilbert_norms: np.ndarray
    objective_path: tuple = ()
    hilbert_norm_path: tuple = ()
    converged: bool = False


class _Block(NamedTuple):
    """Per-coordinate data restricted to the positive part of the Gram
    spectrum."""
    index: np.ndarray
    spectrum: np.ndarray
    design_map: np.ndarray

    @property
    def basis(self):
        return self.design_map / np.sqrt(self.spectrum)


def _factorize(kernel, X, factors):
    if factors is None:
        return (gram_matrix(kernel, X[:, j]) for j in range(X.shape[1]))
    elif len(factors) != X.shape[1]:
        raise DimensionMismatchError(
            f"{len(factors)} Gram factors passed for {X.shape[1]} "
            f"coordinates.")
    return factors


def _blocks(factors):
    blocks = []
    for factor in factors:
        index = factor.positive_part(rtol=_SPECTRUM_RTOL)
        spectrum = factor.spectrum[index]
        blocks.append(_Block(
            index=index, spectrum=spectrum,
            design_map=factor.orthonormal_factor[:, index]
            * np.sqrt(spectrum)))
    return blocks


def _validate_penalties(params):
    validate_params(
        {'lambda_n': params.lambda_n, 'rho_n': params.rho_n},
        {'lambda_n': {'type': Real, 'in': Interval(0, np.inf, closed='left')},
         'rho_n': {'type': Real, 'in': Interval(0, np.inf, closed='left')}})


def _total_objective(residual, weights, blocks, a, b):
    n = len(residual)
    value = 0.5 * np.dot(residual, residual) / n
    for beta, block in zip(weights, blocks):
        value += a * np.sqrt(np.dot(block.spectrum * beta, beta)) \
            + b * np.linalg.norm(beta)
    return float(value)


def _kkt(residual, weights, blocks, a, b):
    n = len(residual)
    distances = [
        _block_kkt_distance(beta, -block.design_map.T @ residual / n,
                            block.spectrum, a, b)
        for beta, block in zip(weights, blocks)]
    return float(max(distances, default=0.))


def _assemble(intercept, weights, blocks, n, **diagnostics):
    d = len(blocks)
    block_weights = np.zeros((d, n))
    dual_weights = np.zeros((d, n))
    empirical_norms = np.zeros(d)
    hilbert_norms = np.zeros(d)
    for j, (beta, block) in enumerate(zip(weights, blocks)):
        block_weights[j, block.index] = beta
        dual_weights[j] = block.basis @ (beta / np.sqrt(block.spectrum))
        empirical_norms[j] = np.sqrt(np.dot(block.spectrum * beta, beta) / n)
        hilbert_norms[j] = np.linalg.norm(beta)
    active_set = tuple(int(j) for j in np.flatnonzero(hilbert_norms > 0))
    return AdditiveFit(intercept=float(intercept),
                       block_weights=block_weights,
                       dual_weights=dual_weights, active_set=active_set,
                       empirical_norms=empirical_norms,
                       hilbert_norms=hilbert_norms, **diagnostics)


def fit(design, responses, kernel, params, options=None, factors=None):
    """Fit the doubly-penalized kernel estimator.

    The estimator minimizes

    .. math::
        \\frac{1}{2n} \\sum_i \\Big(y_i - \\bar y_n - \\sum_j f_j(x_{ij})
        \\Big)^2 + \\lambda_n \\sum_j \\|f_j\\|_n + \\rho_n \\sum_j
        \\|f_j\\|_{\\mathcal{H}}

    over additive functions with :math:`\\|f_j\\|_{\\mathcal{H}} \\leq 1`.
    After reparametrizing each coordinate in the eigenbasis of its Gram
    matrix, blocks are minimized exactly and cyclically until the KKT
    residual falls below ``options.kkt_tol``.

    Parameters
    ----------
    design : array-like of shape (n_samples, n_coordinates)
        Covariates in :math:`[0, 1]`.

    responses : array-like of shape (n_samples,)
        Responses.

    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Univariate kernel shared by all coordinates.

    params : :class:`~spamkern.rates.RegParams`
        Only `lambda_n` and `rho_n` are used.

    options : :class:`SolverOptions` or None, optional, default: ``None``
        ``None`` means default options.

    factors : list of :class:`~spamkern.kernels.GramFactor` or None, \
        optional, default: ``None``
        Precomputed Gram factors, one per coordinate.

    Returns
    -------
    fit : :class:`AdditiveFit`

    Raises
    ------
    NotConvergedError
        If the KKT residual is still above tolerance when the sweep budget
        is exhausted or the objective stalls.

    DecompositionError
        If a Gram eigendecomposition fails.

    """
    options = SolverOptions() if options is None else options
    validate_params(options._asdict(), _solver_references)
    _validate_penalties(params)
    X = check_unit_interval(design, name="design")
    y = check_responses(responses, n_samples=X.shape[0])
    n = X.shape[0]
    if n < 2:
        raise InsufficientDataError(f"At least 2 samples are needed, {n} "
                                    f"passed.")

    blocks = _blocks(_factorize(kernel, X, factors))
    a = params.lambda_n / np.sqrt(n)
    b = params.rho_n
    intercept = y.mean()
    centered = y - intercept
    residual = centered.copy()
    weights = [np.zeros(len(block.index)) for block in blocks]
    previous = _total_objective(residual, weights, blocks, a, b)
    path, norm_path = [], []
    kkt = _kkt(residual, weights, blocks, a, b)
    best_kkt = kkt
    sweeps, stalled_sweeps, converged = 0, 0, kkt <= options.kkt_tol

    while not converged and sweeps < options.max_sweeps:
        sweeps += 1
        for j, block in enumerate(blocks):
            beta = weights[j]
            partial = residual + block.design_map @ beta
            c = block.design_map.T @ partial / n
            quadratic = block.spectrum / n
            candidate = _solve_block(c, quadratic, block.spectrum, a, b)
            if _block_objective(candidate, c, quadratic, block.spectrum,
                                a, b) <= \
                    _block_objective(beta, c, quadratic, block.spectrum,
                                     a, b):
                weights[j] = candidate
                residual = partial - block.design_map @ candidate

        residual = centered - sum(block.design_map @ beta for beta, block
                                  in zip(weights, blocks))
        current = _total_objective(residual, weights, blocks, a, b)
        path.append(current)
        norm_path.append(max((float(np.linalg.norm(beta))
                              for beta in weights), default=0.))
        if current > previous + _MONOTONE_SLACK * max(1., abs(previous)):
            warnings.warn(f"Objective increased from {previous!r} to "
                          f"{current!r} at sweep {sweeps}.", RuntimeWarning,
                          stacklevel=2)
        kkt = _kkt(residual, weights, blocks, a, b)
        logger.debug("sweep %d: objective=%.17g kkt=%.3e", sweeps, current,
                     kkt)
        converged = kkt <= options.kkt_tol
        if previous - current <= options.objective_tol * abs(previous) \
                and kkt >= best_kkt:
            stalled_sweeps += 1
        else:
            stalled_sweeps = 0
        best_kkt = min(best_kkt, kkt)
        previous = current
        if stalled_sweeps >= _STALL_PATIENCE:
            break

    if not converged:
        raise NotConvergedError(
            f"Solver stopped after {sweeps} sweeps with KKT residual "
            f"{kkt:.3e} > {options.kkt_tol:.1e}.", kkt_residual=kkt,
            sweeps_used=sweeps)

    return _assemble(intercept, weights, blocks, n, objective=previous,
                     kkt_residual=kkt, sweeps_used=sweeps,
                     objective_path=tuple(path),
                     hilbert_norm_path=tuple(norm_path), converged=True)


def _check_fit_shape(fit, n, d):
    if fit.block_weights.shape != (d, n) or fit.dual_weights.shape != (d, n):
        raise DimensionMismatchError(
            f"Fit weights have shape {fit.block_weights.shape} but the data "
            f"has {n} samples and {d} coordinates.")


def _full_blocks(fit, design, responses, kernel, factors):
    X = check_unit_interval(design, name="design")
    y = check_responses(responses, n_samples=X.shape[0])
    n, d = X.shape
    _check_fit_shape(fit, n, d)
    factors = _factorize(kernel, X, factors)
    blocks = [_Block(index=np.arange(n), spectrum=factor.spectrum,
                     design_map=factor.orthonormal_factor
                     * np.sqrt(factor.spectrum))
              for factor in factors]
    residual = y - y.mean() - sum(block.design_map @ beta for beta, block
                                  in zip(fit.block_weights, blocks))
    return residual, list(fit.block_weights), blocks


def objective(fit, design, responses, kernel, params, factors=None):
    """Penalized objective of a fit, recomputed from its block weights.

    Uses :math:`\\|f_j\\|_n = \\sqrt{\\beta_j^\\top D_j \\beta_j / n}` and
    :math:`\\|f_j\\|_{\\mathcal{H}} = \\|\\beta_j\\|`.

    Raises
    ------
    DimensionMismatchError
        If the fit does not match the shape of the data.

    """
    _validate_penalties(params)
    residual, weights, blocks = _full_blocks(fit, design, responses, kernel,
                                             factors)
    n = len(residual)
    return _total_objective(residual, weights, blocks,
                            params.lambda_n / np.sqrt(n), params.rho_n)


def kkt_residual(fit, design, responses, kernel, params, factors=None):
    """Largest distance from 0 to a block subdifferential of the objective,
    including the normal cone of the Hilbert ball. Equals 0 at any exact
    minimizer."""
    _validate_penalties(params)
    residual, weights, blocks = _full_blocks(fit, design, responses, kernel,
                                             factors)
    n = len(residual)
    return _kkt(residual, weights, blocks, params.lambda_n / np.sqrt(n),
                params.rho_n)


def population_coefficients(fit, kernel, train_design):
    """Basis coefficients :math:`\\hat a_{jk} = \\mu_k \\sum_i \\alpha_{ij}
    \\phi_k(x_{ij})` of the fitted components.

    Returns
    -------
    coeffs : ndarray of shape (n_coordinates, m_trunc)

    """
    X = check_unit_interval(train_design, name="train_design")
    _check_fit_shape(fit, *X.shape)
    return np.stack([
        kernel.eigenvalues * (kernel.features(X[:, j]).T @ alpha)
        for j, alpha in enumerate(fit.dual_weights)])


def predict(fit, kernel, train_design, new_points):
    """Evaluate a fitted additive model.

    Parameters
    ----------
    fit : :class:`AdditiveFit`
        Fitted model.

    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Kernel used for fitting.

    train_design : array-like of shape (n_samples, n_coordinates)
        Design the model was fitted on.

    new_points : array-like of shape (n_points, n_coordinates)
        Points at which to predict.

    Returns
    -------
    predictions : ndarray of shape (n_points,)
        :math:`\\bar y_n + \\sum_j \\sum_i \\alpha_{ij} \\mathbb{K}(z_j,
        x_{ij})`.

    """
    coeffs = population_coefficients(fit, kernel, train_design)
    Z = check_unit_interval(new_points, name="new_points")
    if Z.shape[1] != coeffs.shape[0]:
        raise DimensionMismatchError(
            f"`new_points` has {Z.shape[1]} coordinates, the fit has "
            f"{coeffs.shape[0]}.")
    values = np.full(Z.shape[0], fit.intercept)
    for j, coeff in enumerate(coeffs):
        values += kernel.features(Z[:, j]) @ coeff
    return values


def fit_from_coefficients(coeffs, kernel, design, intercept=0.,
                          factors=None):
    """Represent a known additive function as an :class:`AdditiveFit` on
    `design`.

    Parameters
    ----------
    coeffs : array-like of shape (n_coordinates, m_trunc)
        Basis coefficients of each component, zero where the kernel
        eigenvalue vanishes.

    kernel : :class:`~spamkern.kernels.SpectralKernel`
        Kernel defining the Hilbert space.

    design : array-like of shape (n_samples, n_coordinates)
        Sample points.

    intercept : float, optional, default: ``0.``
        Intercept of the represented model.

    factors : list of :class:`~spamkern.kernels.GramFactor` or None, \
        optional, default: ``None``
        Precomputed Gram factors.

    Returns
    -------
    fit : :class:`AdditiveFit`
        Objective and KKT fields are ``nan``.

    Raises
    ------
    InsufficientDataError
        If the sample is too small to represent the coefficients exactly.

    """
    X = check_unit_interval(design, name="design")
    n, d = X.shape
    coeffs = np.asarray(coeffs, dtype=np.float64)
    if coeffs.shape != (d, kernel.m_trunc):
        raise DimensionMismatchError(
            f"`coeffs` should have shape {(d, kernel.m_trunc)}, "
            f"{coeffs.shape} passed.")
    positive = kernel.eigenvalues > 0
    blocks, weights = _blocks(_factorize(kernel, X, factors)), []
    for j, block in enumerate(blocks):
        Phi = kernel.features(X[:, j])[:, positive]
        target = coeffs[j, positive] / kernel.eigenvalues[positive]
        alpha = lstsq(Phi.T, target)[0]
        if not np.allclose(Phi.T @ alpha, target, rtol=1e-8, atol=1e-10):
            raise InsufficientDataError(
                f"Coordinate {j}: {n} samples cannot represent "
                f"{np.count_nonzero(positive)} basis functions.")
        weights.append(np.sqrt(block.spectrum) * (block.basis.T @ alpha))
    return _assemble(intercept, weights, blocks, n, objective=np.nan,
                     kkt_residual=np.nan, sweeps_used=0)
