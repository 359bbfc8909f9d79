"""The module :mod:`spamkern.rates` computes the critical univariate rate,
the theory-driven regularization parameters and closed-form upper and lower
rate expressions."""

from .critical import RegParams, q_sigma, empirical_q_sigma, \
    critical_rate, empirical_critical_rate, make_reg_params
from .formulas import upper_rate, lower_rate_logarithmic, \
    lower_rate_polynomial, delta_n, k_bound, bounded_class_rate, rate_ratio

__all__ = [
    'RegParams',
    'q_sigma',
    'empirical_q_sigma',
    'critical_rate',
    'empirical_critical_rate',
    'make_reg_params',
    'upper_rate',
    'lower_rate_logarithmic',
    'lower_rate_polynomial',
    'delta_n',
    'k_bound',
    'bounded_class_rate',
    'rate_ratio'
    ]
