"""The module :mod:`spamkern.utils` implements hyperparameter and input
validation functions and seeding helpers."""

from .validation import check_unit_interval, check_responses, \
    validate_params
from ._random import check_random_generator, spawn_generators, \
    keyed_generator

__all__ = [
    'check_unit_interval',
    'check_responses',
    'validate_params',
    'check_random_generator',
    'spawn_generators',
    'keyed_generator'
    ]
