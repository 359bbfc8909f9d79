"""The module :mod:`spamkern.cli` implements the experiment driver: JSON
configuration, rate sweeps, bound tabulation, slope fitting and CSV
emission."""

from .config import ExperimentConfig, load_config, make_config
from .experiments import run, fit_slope
from ._csv import write_table, read_table

__all__ = [
    'ExperimentConfig',
    'load_config',
    'make_config',
    'run',
    'fit_slope',
    'write_table',
    'read_table'
    ]
