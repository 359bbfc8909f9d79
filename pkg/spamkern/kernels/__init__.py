"""The module :mod:`spamkern.kernels` implements univariate Mercer kernels
given by eigen-expansions, together with their empirical Gram matrices and
Hilbert-norm computations."""

from .spectral import SpectralKernel, make_sobolev_kernel, \
    make_finite_rank_kernel, eval_kernel, kernel_matrix, hilbert_norm_sq, \
    kernel_sup_bound
from .gram import GramFactor, gram_matrix

__all__ = [
    'SpectralKernel',
    'make_sobolev_kernel',
    'make_finite_rank_kernel',
    'eval_kernel',
    'kernel_matrix',
    'hilbert_norm_sq',
    'kernel_sup_bound',
    'GramFactor',
    'gram_matrix'
    ]
