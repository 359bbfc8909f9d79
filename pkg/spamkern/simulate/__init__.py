"""The module :mod:`spamkern.simulate` draws data from the sparse additive
observation model and measures the error of fitted models against the
known truth."""

from .synthetic import SyntheticSpec, Dataset, random_unit_ball_function, \
    additive_values, generate
from .metrics import l2p_error_exact, l2pn_error, support_recovery

__all__ = [
    'SyntheticSpec',
    'Dataset',
    'random_unit_ball_function',
    'additive_values',
    'generate',
    'l2p_error_exact',
    'l2pn_error',
    'support_recovery'
    ]
