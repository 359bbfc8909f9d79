"""End-to-end rate sweeps: slopes of the median prediction error of the
fitted estimator against n and log d."""
# License: GNU AGPLv3

import numpy as np
import pytest
from scipy.stats import linregress

from spamkern.cli import fit_slope, make_config, run

n_sweep = {'mode': 'sweep-n', 'n_grid': [200, 400, 800, 1600, 3200],
           'd_grid': [10], 's_grid': [2], 'kappa': 1., 'c_mult': 16.,
           'replicates': 20, 'threads': 4}


def _run(tmp_path, **values):
    return run(make_config({'output': str(tmp_path / 'sweep.csv'),
                            **values}))


@pytest.mark.slow
def test_finite_rank_error_decays_as_inverse_n(tmp_path):
    # With unit eigenvalues the penalty level exceeds the norm of every
    # true component and all fits below n of about 600 are zero.
    frame = _run(tmp_path, **n_sweep, kernel='finite-rank', m=4,
                 eigenvalue_scale=16.)
    slope, _ = fit_slope(frame, 'n', 'l2p_error')
    assert abs(slope + 1.) <= 0.2


@pytest.mark.slow
@pytest.mark.parametrize("alpha, m_trunc, constant",
                         [(1., 400, 4.), (2., 50, 1.)])
def test_sobolev_error_follows_critical_rate(tmp_path, alpha, m_trunc,
                                             constant):
    frame = _run(tmp_path, **n_sweep, kernel='sobolev', alpha=alpha,
                 m_trunc=m_trunc, eigenvalue_scale=100., constant=constant)
    # The sweep only tests the smoothness-driven rate where the critical
    # rate dominates the subset-selection term.
    n = frame['n'].to_numpy(dtype=np.float64)
    assert np.all(frame['nu_n'].to_numpy() > np.sqrt(np.log(10) / n))
    slope, _ = fit_slope(frame, 'n', 'l2p_error')
    assert abs(slope + 2 * alpha / (2 * alpha + 1)) <= 0.15


@pytest.mark.slow
def test_error_grows_with_log_dimension(tmp_path):
    frame = _run(tmp_path, mode='sweep-d', kernel='sobolev', alpha=1.,
                 m_trunc=50, eigenvalue_scale=16., n_grid=[800],
                 d_grid=[16, 64, 256, 1024], s_grid=[2], replicates=5,
                 threads=4)
    medians = frame.groupby('d')['l2p_error'].median()
    d = medians.index.to_numpy(dtype=np.float64)
    assert linregress(np.log(d), medians.to_numpy()).slope > 0
    assert 1.5 <= medians[1024] / medians[16] <= 20.
