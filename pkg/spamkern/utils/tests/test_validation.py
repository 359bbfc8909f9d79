"""Tests for validation functions."""
# License: GNU AGPLv3

from numbers import Integral, Real

import numpy as np
import pytest

from spamkern.exceptions import DimensionMismatchError, DomainError
from spamkern.utils import check_unit_interval, check_responses, \
    validate_params
from spamkern.utils.intervals import Interval


def test_validate_params():
    references = {'par1': {'type': int, 'in': [0, 1]}}

    with pytest.raises(TypeError):
        validate_params({'par1': 0.5}, references)

    with pytest.raises(ValueError):
        validate_params({'par1': 2}, references)

    with pytest.raises(KeyError):
        validate_params({'par0': 1}, references)

    validate_params({'par0': 1, 'par1': 1}, references, exclude=['par0'])


def test_validate_params_containers():
    references = {
        'grid': {'type': (tuple, list),
                 'of': {'type': Integral,
                        'in': Interval(1, np.inf, closed='left')}},
        'nested': {'type': dict,
                   'of': {'tol': {'type': Real,
                                  'in': Interval(0, np.inf,
                                                 closed='neither')}}}
        }
    validate_params({'grid': (1, 2), 'nested': {'tol': 1e-3}}, references)

    with pytest.raises(ValueError, match=r"grid\[1\]"):
        validate_params({'grid': [1, 0]}, references)

    with pytest.raises(ValueError):
        validate_params({'nested': {'tol': 0.}}, references)

    with pytest.raises(KeyError, match="nested"):
        validate_params({'nested': {'atol': 1.}}, references)


def test_validate_params_optional():
    references = {'m': {'type': (type(None), Integral),
                        'in': Interval(1, np.inf, closed='left')}}
    validate_params({'m': None}, references)
    validate_params({'m': 3}, references)

    with pytest.raises(ValueError):
        validate_params({'m': 0}, references)


def test_validate_params_other():
    def _even(value):
        if value % 2:
            raise ValueError("odd")

    references = {'s': {'type': Integral, 'other': _even}}
    validate_params({'s': 4}, references)

    with pytest.raises(ValueError, match="odd"):
        validate_params({'s': 3}, references)


def test_validate_params_rejects_flags_as_numbers():
    references = {'m': {'type': Integral},
                  'tol': {'type': Real},
                  'verbose': {'type': (bool, Integral)}}
    validate_params({'m': 2, 'tol': 1e-3, 'verbose': True}, references)

    with pytest.raises(TypeError, match="`m`"):
        validate_params({'m': True}, references)

    with pytest.raises(TypeError, match="`tol`"):
        validate_params({'tol': np.bool_(False)}, references)


def test_validate_params_entry_names():
    references = {'grid': {'type': list,
                           'of': {'type': Real,
                                  'in': Interval(0, 1, closed='both')}}}
    validate_params({'grid': []}, references)

    with pytest.raises(TypeError, match=r"grid\[2\]"):
        validate_params({'grid': [0.1, 0.2, "0.3"]}, references)


@pytest.mark.parametrize(('closed', 'members', 'outsiders'),
                         [('both', [0, 0.5, 1], [-0.1, 1.1]),
                          ('left', [0, 0.5], [1]),
                          ('right', [0.5, 1], [0]),
                          ('neither', [0.5], [0, 1])])
def test_interval_membership(closed, members, outsiders):
    interval = Interval(0, 1, closed=closed)
    assert all(value in interval for value in members)
    assert not any(value in interval for value in outsiders)


def test_interval_invalid():
    with pytest.raises(ValueError):
        Interval(1, 0, closed='both')

    with pytest.raises(ValueError):
        Interval(0, 1, closed='open')

    with pytest.raises(ValueError):
        Interval('0', 1, closed='both')

    with pytest.raises(TypeError):
        Interval(0, 0.5, closed='both') in Interval(0, 1, closed='both')


def test_interval_repr():
    interval = Interval(0, np.inf, closed='left')
    assert str(interval) == '[0, inf)'
    assert interval == Interval(0, np.inf, closed='left')
    assert interval != Interval(0, np.inf, closed='neither')


def test_check_unit_interval():
    X = check_unit_interval([[0., 1.], [0.5, 0.25]])
    assert X.dtype == np.float64
    assert X.shape == (2, 2)

    column = check_unit_interval([0., 1.], ensure_2d=False)
    assert column.shape == (2,)

    with pytest.raises(DomainError, match="1 entries"):
        check_unit_interval([[0., 1.01]])

    with pytest.raises(ValueError):
        check_unit_interval([[np.nan, 0.5]])

    with pytest.raises(ValueError):
        check_unit_interval([[0.5]], ensure_2d=False)


def test_check_responses():
    y = check_responses([1, 2, 3], n_samples=3)
    assert y.dtype == np.float64

    with pytest.raises(DimensionMismatchError):
        check_responses([1., 2.], n_samples=3)

    with pytest.raises(ValueError):
        check_responses([[1.], [2.]])
