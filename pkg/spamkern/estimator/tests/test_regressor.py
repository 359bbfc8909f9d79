"""Testing for the scikit-learn compatible regressor."""
# License: GNU AGPLv3

import numpy as np
import pytest
from numpy.testing import assert_allclose
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from spamkern.estimator import SparseAdditiveRegressor, fit, predict
from spamkern.exceptions import DimensionMismatchError
from spamkern.kernels import make_sobolev_kernel
from spamkern.rates import make_reg_params

kernel = make_sobolev_kernel(2, m_trunc=200)
rng = np.random.default_rng(0)
X = rng.uniform(size=(60, 4))
y = np.sqrt(2) * np.cos(2 * np.pi * X[:, 0]) + 0.1 * rng.normal(size=60)


def test_regressor_not_fitted():
    with pytest.raises(NotFittedError):
        SparseAdditiveRegressor(kernel).predict(X)


def test_regressor_params():
    model = SparseAdditiveRegressor(kernel, c_mult=20., lambda_n=0.1)
    params = model.get_params()
    assert params['c_mult'] == 20.
    assert params['lambda_n'] == 0.1
    assert clone(model).get_params() == params


@pytest.mark.parametrize("params", [{'c_mult': 15.}, {'kappa': 0.},
                                    {'lambda_n': -1.}, {'max_sweeps': 0}])
def test_regressor_invalid_params(params):
    with pytest.raises(ValueError):
        SparseAdditiveRegressor(kernel, **params).fit(X, y)


def test_regressor_invalid_kernel():
    with pytest.raises(TypeError):
        SparseAdditiveRegressor(kernel=np.ones(3)).fit(X, y)


def test_regressor_theory_driven_params():
    model = SparseAdditiveRegressor(kernel).fit(X, y)
    expected = make_reg_params(kernel, 60, 4)
    assert_allclose(model.reg_params_.lambda_n, expected.lambda_n)
    assert_allclose(model.reg_params_.rho_n, expected.rho_n)
    reference = fit(X, y, kernel, expected)
    assert_allclose(model.fit_.block_weights, reference.block_weights)
    assert_allclose(model.predict(X[:5]),
                    predict(reference, kernel, X, X[:5]))


def test_regressor_explicit_params():
    model = SparseAdditiveRegressor(kernel, lambda_n=0.05, rho_n=0.001)
    model.fit(X, y)
    assert model.reg_params_.lambda_n == 0.05
    assert model.reg_params_.rho_n == 0.001
    assert 0 in model.fit_.active_set
    assert model.score(X, y) > 0.5


def test_regressor_default_kernel():
    model = SparseAdditiveRegressor(lambda_n=0.05, rho_n=0.001).fit(X, y)
    assert model.kernel_ == make_sobolev_kernel(1)
    assert model.kernel is None


def test_regressor_predict_shape_mismatch():
    model = SparseAdditiveRegressor(kernel, lambda_n=0.05, rho_n=0.001)
    with pytest.raises(DimensionMismatchError):
        model.fit(X, y).predict(X[:, :3])
