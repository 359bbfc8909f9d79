"""Experiment configuration read from a flat JSON document."""
# License: GNU AGPLv3

import json
from numbers import Integral, Real
from typing import NamedTuple, Optional

import numpy as np

from ..exceptions import ConfigError
from ..kernels import make_finite_rank_kernel, make_sobolev_kernel
from ..utils.intervals import Interval
from ..utils.validation import validate_params

MODES = ('fit', 'sweep-n', 'sweep-d', 'sweep-s', 'lower-bound', 'packing',
         'complexity', 'sandwich')

_positive_integer = {'type': Integral, 'in': Interval(1, np.inf, closed='left')}
_positive_real = {'type': Real, 'in': Interval(0, np.inf, closed='neither')}
_integer_grid = {'type': list, 'of': _positive_integer}

_config_references = {
    'mode': {'type': str, 'in': MODES},
    'kernel': {'type': str, 'in': ('finite-rank', 'sobolev')},
    'm': {'type': (Integral, type(None)),
          'in': Interval(1, np.inf, closed='left')},
    'alpha': {'type': (Real, type(None)),
              'in': Interval(0.5, np.inf, closed='neither')},
    'm_trunc': _positive_integer,
    'eigenvalue_scale': _positive_real,
    'n_grid': _integer_grid,
    'd_grid': _integer_grid,
    's_grid': _integer_grid,
    'replicates': _positive_integer,
    'kappa': _positive_real,
    'c_mult': {'type': Real, 'in': Interval(16, np.inf, closed='left')},
    'c_mult_grid': {'type': (list, type(None)),
                    'of': {'type': Real,
                           'in': Interval(16, np.inf, closed='left')}},
    'constant': _positive_real,
    'seed': {'type': Integral, 'in': Interval(0, 2 ** 63, closed='left')},
    'output': {'type': (str, type(None))},
    'threads': _positive_integer,
    'mu': {'type': Real},
    'noise_std': {'type': Real, 'in': Interval(0, np.inf, closed='left')},
    'signal_radius': {'type': Real, 'in': Interval(0, 1, closed='right')},
    'bound_b': {'type': Real, 'in': Interval(0, np.inf, closed='left')},
    'alphabet': _positive_integer,
    'max_packing_size': _positive_integer,
    't_grid': {'type': list, 'of': _positive_real},
    'trials': _positive_integer,
    'mc_reps': {'type': Integral, 'in': Interval(30, np.inf, closed='left')},
    'complexity_noise': {'type': str, 'in': ('gaussian', 'rademacher')},
    'max_sweeps': _positive_integer,
    'kkt_tol': _positive_real,
    'objective_tol': _positive_real,
    'support_threshold': {'type': Real,
                          'in': Interval(0, np.inf, closed='left')},
    'record_wall_time': {'type': bool}
    }


class ExperimentConfig(NamedTuple):
    """Validated experiment configuration.

    Every field can be set by the key of the same name in the JSON
    document. Grids must be nonempty and strictly increasing.

    Attributes
    ----------
    mode : str
        One of ``'fit'``, ``'sweep-n'``, ``'sweep-d'``, ``'sweep-s'``,
        ``'lower-bound'``, ``'packing'``, ``'complexity'`` and
        ``'sandwich'``.

    kernel : ``'finite-rank'`` | ``'sobolev'``, default: ``'sobolev'``
        Kernel family. Finite-rank kernels need `m`, Sobolev kernels
        `alpha`.

    eigenvalue_scale : float, default: ``1.``
        Common factor of the kernel eigenvalues. Larger values enlarge the
        Hilbert unit ball relative to the penalty levels, which keeps the
        penalized fits away from the all-zero solution at moderate `n`.

    n_grid, d_grid, s_grid : list of int
        Sample sizes, dimensions and sparsities. Modes which do not sweep a
        grid use its first entry.

    replicates : int, default: ``1``
        Replicates per grid point of the fitting modes.

    c_mult_grid : list of float or None, default: ``None``
        When set, every fit is repeated for each penalty multiplier in the
        list instead of using `c_mult` alone.

    seed : int, default: ``0``
        Root seed. Every replicate draws from the stream keyed by
        ``(seed, n, d, s, replicate)``.

    output : str or None
        Path of the CSV file.

    threads : int, default: ``1``
        Number of joblib workers.

    """
    mode: str
    kernel: str = 'sobolev'
    m: Optional[int] = None
    alpha: Optional[float] = 1.
    m_trunc: int = 1000
    eigenvalue_scale: float = 1.
    n_grid: tuple = (200,)
    d_grid: tuple = (10,)
    s_grid: tuple = (2,)
    replicates: int = 1
    kappa: float = 1.
    c_mult: float = 16.
    c_mult_grid: Optional[tuple] = None
    constant: float = 40.
    seed: int = 0
    output: Optional[str] = None
    threads: int = 1
    mu: float = 0.
    noise_std: float = 1.
    signal_radius: float = 1.
    bound_b: float = 1.
    alphabet: int = 2
    max_packing_size: int = 1000
    t_grid: tuple = (0.05, 0.1, 0.2, 0.4)
    trials: int = 200
    mc_reps: int = 200
    complexity_noise: str = 'gaussian'
    max_sweeps: int = 10000
    kkt_tol: float = 1e-6
    objective_tol: float = 1e-12
    support_threshold: float = 0.
    record_wall_time: bool = False

    def make_kernel(self):
        """Build the configured :class:`~spamkern.kernels.SpectralKernel`."""
        if self.kernel == 'finite-rank':
            return make_finite_rank_kernel(self.m,
                                           scale=self.eigenvalue_scale)
        return make_sobolev_kernel(self.alpha, m_trunc=self.m_trunc,
                                   scale=self.eigenvalue_scale)


def _check_grids(values):
    for name in ('n_grid', 'd_grid', 's_grid', 't_grid', 'c_mult_grid'):
        grid = values.get(name)
        if grid is None:
            continue
        if not len(grid):
            raise ConfigError(f"`{name}` must not be empty.")
        if np.any(np.diff(grid) <= 0):
            raise ConfigError(f"`{name}` must be strictly increasing, "
                              f"{list(grid)} passed.")


def make_config(values):
    """Validate a dictionary of settings and return an
    :class:`ExperimentConfig`.

    Raises
    ------
    ConfigError
        On unknown keys, wrong types, out-of-range values, empty or
        unsorted grids, or a kernel family missing its parameter.

    """
    values = {key: value for key, value in values.items()}
    try:
        validate_params(values, _config_references)
    except (TypeError, ValueError, KeyError) as err:
        raise ConfigError(str(err)) from err
    if 'mode' not in values:
        raise ConfigError("No experiment mode given.")
    _check_grids(values)
    if values.get('kernel') == 'finite-rank' and values.get('m') is None:
        raise ConfigError("Finite-rank kernels need the rank `m`.")
    if values.get('kernel', 'sobolev') == 'sobolev' and \
            'alpha' in values and values['alpha'] is None:
        raise ConfigError("Sobolev kernels need the smoothness `alpha`.")
    for name in ('n_grid', 'd_grid', 's_grid', 't_grid', 'c_mult_grid'):
        if values.get(name) is not None:
            values[name] = tuple(values[name])
    return ExperimentConfig(**values)


def load_config(path, **overrides):
    """Read a JSON configuration file and validate it.

    Parameters
    ----------
    path : str or path-like
        JSON document with a single object of flat keys.

    **overrides
        Settings taking precedence over the file, such as ``mode`` or
        ``output`` from the command line. ``None`` values are ignored.

    Returns
    -------
    config : :class:`ExperimentConfig`

    Raises
    ------
    ConfigError
        If the file cannot be read or parsed, if `mode` in the file
        contradicts the requested mode, or if validation fails.

    """
    try:
        with open(path, encoding='utf-8') as file:
            values = json.load(file)
    except (OSError, json.JSONDecodeError) as err:
        raise ConfigError(f"Cannot read configuration {path}: {err}") \
            from err
    if not isinstance(values, dict):
        raise ConfigError("The configuration must be a JSON object.")
    mode = overrides.get('mode')
    if mode is not None and values.get('mode', mode) != mode:
        raise ConfigError(f"Configuration is for mode {values['mode']!r} "
                          f"but mode {mode!r} was requested.")
    values.update({key: value for key, value in overrides.items()
                   if value is not None})
    return make_config(values)
