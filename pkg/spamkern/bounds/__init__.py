"""The module :mod:`spamkern.bounds` implements the lower-bound side:
sparse packings and their function families, the Fano bound and Monte Carlo
checks of complexities and norm equivalences."""

from .packing import PackingSet, n_star, log_n_star, n_star_lower_bound, \
    greedy_packing, pairwise_hamming, check_packing, packing_to_functions, \
    packing_diameter_scale
from .fano import fano_bound, fano_critical_delta
from .complexity import gaussian_complexity_mc, sandwich_check

__all__ = [
    'PackingSet',
    'n_star',
    'log_n_star',
    'n_star_lower_bound',
    'greedy_packing',
    'pairwise_hamming',
    'check_packing',
    'packing_to_functions',
    'packing_diameter_scale',
    'fano_bound',
    'fano_critical_delta',
    'gaussian_complexity_mc',
    'sandwich_check'
    ]
