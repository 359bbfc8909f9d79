"""Testing for experiment configurations."""
# License: GNU AGPLv3

import json

import pytest

from spamkern.cli import ExperimentConfig, load_config, make_config
from spamkern.exceptions import ConfigError
from spamkern.kernels import make_finite_rank_kernel, make_sobolev_kernel


def _write(tmp_path, values):
    path = tmp_path / 'config.json'
    path.write_text(json.dumps(values))
    return path


def test_load_config_defaults(tmp_path):
    config = load_config(_write(tmp_path, {'mode': 'fit'}))
    assert config == ExperimentConfig(mode='fit')
    assert config.make_kernel() == make_sobolev_kernel(1)


def test_load_config_overrides(tmp_path):
    path = _write(tmp_path, {'kernel': 'finite-rank', 'm': 4,
                             'n_grid': [200, 400], 'threads': 2})
    config = load_config(path, mode='sweep-n', output='out.csv',
                         threads=None)
    assert config.mode == 'sweep-n'
    assert config.output == 'out.csv'
    assert config.threads == 2
    assert config.n_grid == (200, 400)
    assert config.make_kernel() == make_finite_rank_kernel(4)


def test_load_config_eigenvalue_scale(tmp_path):
    path = _write(tmp_path, {'mode': 'fit', 'kernel': 'finite-rank', 'm': 4,
                             'eigenvalue_scale': 16})
    config = load_config(path)
    assert config.make_kernel() == make_finite_rank_kernel(4, scale=16)
    config = make_config({'mode': 'fit', 'alpha': 2, 'm_trunc': 10,
                          'eigenvalue_scale': 0.5})
    assert config.make_kernel() == make_sobolev_kernel(2, m_trunc=10,
                                                       scale=0.5)


def test_load_config_mode_conflict(tmp_path):
    with pytest.raises(ConfigError):
        load_config(_write(tmp_path, {'mode': 'fit'}), mode='packing')


@pytest.mark.parametrize("values", [
    {'mode': 'fit', 'replicates': 0},
    {'mode': 'fit', 'n_grid': []},
    {'mode': 'fit', 'n_grid': [400, 200]},
    {'mode': 'fit', 'n_grid': [200, 200]},
    {'mode': 'fit', 'c_mult': 8.},
    {'mode': 'fit', 'c_mult_grid': [16., 15.]},
    {'mode': 'fit', 'kernel': 'gaussian'},
    {'mode': 'fit', 'kernel': 'finite-rank'},
    {'mode': 'fit', 'alpha': 0.5},
    {'mode': 'fit', 'eigenvalue_scale': 0},
    {'mode': 'fit', 'seed': -1},
    {'mode': 'fit', 'record_wall_time': 1},
    {'mode': 'fit', 'unknown': 1},
    {'mode': 'plot'},
    {'kernel': 'sobolev'}
    ])
def test_make_config_invalid(values):
    with pytest.raises(ConfigError):
        make_config(values)


def test_load_config_unreadable(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / 'missing.json')
    path = tmp_path / 'broken.json'
    path.write_text('{"mode": ')
    with pytest.raises(ConfigError):
        load_config(path)
    path.write_text('[1, 2]')
    with pytest.raises(ConfigError):
        load_config(path)
