"""The module :mod:`spamkern.estimator` implements the doubly-penalized
kernel estimator of sparse additive models and its block proximal
operator."""

from ._prox import block_prox, zero_block_test
from .additive import SolverOptions, AdditiveFit, fit, objective, \
    kkt_residual, predict, population_coefficients, fit_from_coefficients
from .regressor import SparseAdditiveRegressor

__all__ = [
    'block_prox',
    'zero_block_test',
    'SolverOptions',
    'AdditiveFit',
    'fit',
    'objective',
    'kkt_residual',
    'predict',
    'population_coefficients',
    'fit_from_coefficients',
    'SparseAdditiveRegressor'
    ]
