"""Experiment runners producing one table per mode."""
# License: GNU AGPLv3

import logging
import time
from itertools import product

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from scipy.stats import linregress

from ..bounds import n_star, log_n_star, greedy_packing, pairwise_hamming, \
    packing_to_functions, fano_critical_delta, gaussian_complexity_mc, \
    sandwich_check
from ..estimator import SolverOptions, fit
from ..exceptions import InsufficientDataError, NotConvergedError
from ..kernels import SpectralKernel
from ..rates import critical_rate, make_reg_params, q_sigma, upper_rate, \
    lower_rate_logarithmic, lower_rate_polynomial, delta_n, k_bound, \
    bounded_class_rate, rate_ratio
from ..simulate import SyntheticSpec, generate, l2p_error_exact, \
    l2pn_error, support_recovery
from ..utils._random import keyed_generator
from ._csv import write_table

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ('n', 'd', 's', 'replicate', 'l2p_error', 'l2pn_error',
                 'active_set_size', 'lambda_n', 'rho_n', 'nu_n',
                 'sweeps_used', 'wall_time_seconds', 'c_mult', 'precision',
                 'recall', 'failed')
LOWER_BOUND_COLUMNS = ('n', 'd', 's', 'nu_n', 'upper_rate', 'lower_rate',
                       'delta_n', 'k_bound', 'bounded_class_rate',
                       'rate_ratio')
PACKING_COLUMNS = ('d', 's', 'alphabet', 'n_star', 'log_n_star',
                   'packing_size', 'min_hamming', 'min_l2_sq', 'fano_delta')
COMPLEXITY_COLUMNS = ('n', 't', 'mean', 'std_err', 'q_sigma', 'ratio')
SANDWICH_COLUMNS = ('n', 't', 'trials', 'nu_n', 'frequency')

_INTEGER_COLUMNS = ('n', 'd', 's', 'replicate', 'active_set_size',
                    'sweeps_used', 'failed', 'alphabet', 'packing_size',
                    'min_hamming', 'trials')


def _frame(rows, columns):
    frame = pd.DataFrame(rows, columns=list(columns))
    for column in columns:
        if column in _INTEGER_COLUMNS:
            frame[column] = frame[column].astype('Int64')
        else:
            frame[column] = frame[column].astype(np.float64)
    return frame


def _sweep_points(config):
    n_grid, d_grid, s_grid = config.n_grid, config.d_grid, config.s_grid
    if config.mode == 'fit':
        return [(n_grid[0], d_grid[0], s_grid[0])]
    if config.mode == 'sweep-n':
        return [(n, d_grid[0], s_grid[0]) for n in n_grid]
    if config.mode == 'sweep-d':
        return [(n_grid[0], d, s_grid[0]) for d in d_grid]
    return [(n_grid[0], d_grid[0], s) for s in s_grid]


def _fit_row(config, kernel, n, d, s, c_mult, replicate):
    """Fit one replicate and return its row of the sweep table."""
    data_seed = int(keyed_generator(config.seed, n, d, s, replicate)
                    .integers(2 ** 63))
    dataset = generate(SyntheticSpec(
        d=d, s=s, n=n, kernel=kernel, mu=config.mu,
        noise_std=config.noise_std, signal_radius=config.signal_radius,
        seed=data_seed))
    params = make_reg_params(kernel, n, d, kappa=config.kappa,
                             c_mult=c_mult, constant=config.constant)
    options = SolverOptions(max_sweeps=config.max_sweeps,
                            kkt_tol=config.kkt_tol,
                            objective_tol=config.objective_tol)
    row = {'n': n, 'd': d, 's': s, 'replicate': replicate,
           'lambda_n': params.lambda_n, 'rho_n': params.rho_n,
           'nu_n': params.nu_n, 'c_mult': c_mult, 'failed': 0}
    start = time.perf_counter()
    try:
        result = fit(dataset.design, dataset.responses, kernel, params,
                     options)
    except NotConvergedError as err:
        logger.warning("Fit failed for n=%d, d=%d, s=%d, replicate %d: %s",
                       n, d, s, replicate, err)
        row.update(failed=1, sweeps_used=err.sweeps_used)
        return row
    elapsed = time.perf_counter() - start
    precision, recall = support_recovery(result, dataset,
                                         config.support_threshold)
    row.update(l2p_error=l2p_error_exact(result, dataset, kernel),
               l2pn_error=l2pn_error(result, dataset, kernel),
               active_set_size=len(result.active_set),
               sweeps_used=result.sweeps_used, precision=precision,
               recall=recall)
    if config.record_wall_time:
        row['wall_time_seconds'] = elapsed
    return row


def run_sweep(config):
    """Fit every grid point, penalty multiplier and replicate of a fitting
    mode. Rows are ordered by grid point, then multiplier, then
    replicate."""
    kernel = config.make_kernel()
    c_mults = config.c_mult_grid or (config.c_mult,)
    tasks = [(n, d, s, c_mult, replicate)
             for (n, d, s), c_mult, replicate in product(
                 _sweep_points(config), c_mults, range(config.replicates))]
    logger.info("Running %d fits with %d threads.", len(tasks),
                config.threads)
    rows = Parallel(n_jobs=config.threads)(
        delayed(_fit_row)(config, kernel, *task) for task in tasks)
    return _frame(rows, SWEEP_COLUMNS)


def _optional(func, *args):
    """Value of `func` or ``None`` where it is undefined."""
    try:
        return func(*args)
    except ValueError:
        return None


def run_lower_bound(config):
    """Tabulate rate formulas over the product of the n, d and s grids."""
    kernel = config.make_kernel()
    sobolev = config.kernel == 'sobolev'
    rows = []
    for n, d, s in product(config.n_grid, config.d_grid, config.s_grid):
        row = {'n': n, 'd': d, 's': s,
               'nu_n': critical_rate(kernel, n, constant=config.constant),
               'upper_rate': _optional(upper_rate, s, d, n, kernel)}
        if sobolev:
            alpha, bound_b = config.alpha, config.bound_b
            row.update(
                lower_rate=_optional(lower_rate_polynomial, s, d, n, alpha),
                delta_n=_optional(delta_n, s, d, n, alpha, bound_b),
                k_bound=_optional(k_bound, s, n, alpha, bound_b),
                bounded_class_rate=_optional(bounded_class_rate, s, d, n,
                                             alpha, bound_b),
                rate_ratio=_optional(rate_ratio, s, d, n, alpha, bound_b))
        else:
            row['lower_rate'] = _optional(lower_rate_logarithmic, s, d, n,
                                          config.m)
        rows.append(row)
    return _frame(rows, LOWER_BOUND_COLUMNS)


def _min_l2_sq(packing, kernel):
    """Smallest squared distance between the functions of a packing at
    unit scale, or ``None`` when undefined."""
    if len(packing) < 2 or packing.alphabet_size > kernel.rank:
        return None
    # Only the first N basis directions are used.
    head = SpectralKernel(kernel.eigenvalues[:packing.alphabet_size])
    scale = 0.5 * np.sqrt(packing.sparsity * head.eigenvalues[-1])
    flat = packing_to_functions(packing, head, scale).reshape(
        len(packing), -1) / scale
    return float(min(np.min(np.sum((flat[i + 1:] - flat[i]) ** 2, axis=1))
                     for i in range(len(packing) - 1)))


def run_packing(config):
    """Build a greedy packing for every (d, s) pair of the grids."""
    kernel = config.make_kernel()
    rows = []
    for d, s in product(config.d_grid, config.s_grid):
        if s > d:
            continue
        even = not s % 2
        target = config.max_packing_size
        if even:
            target = min(target, max(1, int(np.floor(n_star(d, s,
                                                            config.alphabet)))))
        packing = greedy_packing(d, s, config.alphabet, target,
                                 random_state=keyed_generator(config.seed,
                                                              d, s))
        distances = pairwise_hamming(packing.codewords)
        row = {'d': d, 's': s, 'alphabet': config.alphabet,
               'n_star': n_star(d, s, config.alphabet) if even else None,
               'log_n_star': log_n_star(d, s, config.alphabet)
               if even else None,
               'packing_size': len(packing),
               'min_hamming': int(np.min(distances[np.triu_indices(
                   len(packing), 1)])) if len(packing) > 1 else None,
               'min_l2_sq': _min_l2_sq(packing, kernel),
               'fano_delta': fano_critical_delta(config.n_grid[0],
                                                 np.log(len(packing)))
               if len(packing) > 1 else None}
        rows.append(row)
    return _frame(rows, PACKING_COLUMNS)


def run_complexity(config):
    """Monte Carlo localized complexities against their population
    proxy. All radii at a given n share the design and the weights."""
    kernel = config.make_kernel()
    rows = []
    for n in config.n_grid:
        column = keyed_generator(config.seed, n).uniform(size=n)
        for t in config.t_grid:
            mean, std_err = gaussian_complexity_mc(
                kernel, column, t, reps=config.mc_reps,
                random_state=keyed_generator(config.seed, n, 1),
                noise=config.complexity_noise, n_jobs=config.threads)
            proxy = q_sigma(t, kernel, n)
            rows.append({'n': n, 't': t, 'mean': mean, 'std_err': std_err,
                         'q_sigma': proxy, 'ratio': mean / proxy})
    return _frame(rows, COMPLEXITY_COLUMNS)


def run_sandwich(config):
    """Frequency of norm equivalence for every (n, t) pair."""
    kernel = config.make_kernel()
    rows = []
    for n, t in product(config.n_grid, config.t_grid):
        frequency = sandwich_check(
            kernel, n, config.trials, t,
            random_state=np.random.SeedSequence([config.seed, n]),
            n_jobs=config.threads)
        rows.append({'n': n, 't': t, 'trials': config.trials,
                     'nu_n': critical_rate(kernel, n,
                                           constant=config.constant),
                     'frequency': frequency})
    return _frame(rows, SANDWICH_COLUMNS)


_RUNNERS = {
    'fit': run_sweep,
    'sweep-n': run_sweep,
    'sweep-d': run_sweep,
    'sweep-s': run_sweep,
    'lower-bound': run_lower_bound,
    'packing': run_packing,
    'complexity': run_complexity,
    'sandwich': run_sandwich
    }

_SLOPE_AXES = {'sweep-n': 'n', 'sweep-d': 'd', 'sweep-s': 's'}


def fit_slope(rows, x_col, y_col):
    """Log-log slope of the per-x median of `y_col` against `x_col`.

    Parameters
    ----------
    rows : :class:`pandas.DataFrame`
        Table with columns `x_col` and `y_col`. Rows with a missing
        `y_col` are ignored.

    x_col, y_col : str
        Column names. Both must be positive where `y_col` is present.

    Returns
    -------
    slope : float
        Ordinary least squares slope of :math:`\\log \\mathrm{median}(y)`
        on :math:`\\log x`.

    stderr : float
        Standard error of the slope.

    Raises
    ------
    InsufficientDataError
        If fewer than 3 distinct `x_col` values remain.

    Examples
    --------
    >>> import pandas as pd
    >>> from spamkern.cli import fit_slope
    >>> rows = pd.DataFrame({'n': [100, 200, 400], 'err': [1., 0.5, 0.25]})
    >>> round(fit_slope(rows, 'n', 'err')[0], 12)
    -1.0

    """
    present = rows.loc[rows[y_col].notna(), [x_col, y_col]]
    medians = present.groupby(x_col)[y_col].median()
    if len(medians) < 3:
        raise InsufficientDataError(
            f"Slope fitting needs at least 3 distinct values of `{x_col}`, "
            f"{len(medians)} available.")
    x = medians.index.to_numpy(dtype=np.float64)
    y = medians.to_numpy(dtype=np.float64)
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("Slope fitting needs positive values.")
    result = linregress(np.log(x), np.log(y))
    return float(result.slope), float(result.stderr)


def run(config):
    """Run the experiment described by `config` and write its table to
    ``config.output``.

    Returns
    -------
    frame : :class:`pandas.DataFrame`
        The table written.

    """
    logger.info("Starting %s experiment with seed %d.", config.mode,
                config.seed)
    frame = _RUNNERS[config.mode](config)
    axis = _SLOPE_AXES.get(config.mode)
    if axis is not None:
        try:
            slope, stderr = fit_slope(frame, axis, 'l2p_error')
            logger.info("Slope of median l2p_error against %s: %.4f "
                        "(stderr %.4f).", axis, slope, stderr)
        except (InsufficientDataError, ValueError) as err:
            logger.info("No slope fitted: %s", err)
    n_failed = int(frame['failed'].sum()) if 'failed' in frame else 0
    if n_failed:
        logger.warning("%d of %d fits did not converge.", n_failed,
                       len(frame))
    write_table(frame, config.output)
    logger.info("Wrote %d rows to %s.", len(frame), config.output)
    return frame
