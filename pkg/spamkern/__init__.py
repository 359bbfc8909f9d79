"""``spamkern`` is a Python library for sparse additive models over
reproducing kernel Hilbert spaces: a doubly-penalized kernel estimator,
theory-driven regularization and rate formulas, and simulation tools to
check the predicted rates empirically."""
# License: GNU AGPLv3

from ._version import __version__

__all__ = [
    'kernels',
    'rates',
    'estimator',
    'simulate',
    'bounds',
    'cli',
    'utils',
    'exceptions',
    '__version__'
    ]
