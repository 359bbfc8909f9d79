"""Testing for Gram matrices and their factorizations."""
# License: GNU AGPLv3

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.extra.numpy import arrays
from hypothesis.strategies import floats, integers
from numpy.testing import assert_allclose

from spamkern.exceptions import DomainError
from spamkern.kernels import make_sobolev_kernel, make_finite_rank_kernel, \
    eval_kernel, gram_matrix

sobolev = make_sobolev_kernel(1, m_trunc=200)


def test_gram_single_point():
    factor = gram_matrix(sobolev, [0.3])
    assert factor.matrix.shape == (1, 1)
    assert_allclose(factor.spectrum, [eval_kernel(sobolev, 0.3, 0.3)],
                    rtol=1e-14)
    assert_allclose(np.abs(factor.orthonormal_factor), [[1.]])


def test_gram_rank_one():
    factor = gram_matrix(make_finite_rank_kernel(1), [0.1, 0.45, 0.8])
    assert np.all(factor.spectrum[1:] <= 1e-8)
    assert factor.spectrum[0] > 0


@pytest.mark.parametrize("m", [1, 3, 5])
def test_gram_rank_bound(m):
    column = np.random.default_rng(m).uniform(size=30)
    factor = gram_matrix(make_finite_rank_kernel(m), column)
    assert np.all(factor.spectrum[m:] <= 1e-8)
    assert len(factor.positive_part(rtol=1e-10)) <= m


def test_gram_reconstruction_sobolev():
    column = np.random.default_rng(0).uniform(size=50)
    factor = gram_matrix(sobolev, column)
    error = np.linalg.norm(factor.reconstruct() - factor.matrix)
    assert error <= 1e-8 * np.linalg.norm(factor.matrix)
    U = factor.orthonormal_factor
    assert_allclose(U.T @ U, np.eye(50), atol=1e-10)
    assert np.all(np.diff(factor.spectrum) <= 0)


@settings(deadline=None, max_examples=30)
@given(column=arrays(dtype=float, shape=integers(1, 25),
                     elements=floats(min_value=0., max_value=1.)))
def test_gram_invariants(column):
    factor = gram_matrix(sobolev, column)
    assert np.all(factor.spectrum >= 0)
    error = np.linalg.norm(factor.reconstruct() - factor.matrix)
    assert error <= 1e-8 * max(np.linalg.norm(factor.matrix), 1e-300) + 1e-12


def test_gram_entries_match_eval_kernel():
    column = np.random.default_rng(1).uniform(size=50)
    kernel = make_sobolev_kernel(1)
    factor = gram_matrix(kernel, column)
    values = np.array([[eval_kernel(kernel, x, y)
                        for y in column] for x in column])
    assert np.array_equal(values, factor.matrix)
    assert np.array_equal(factor.matrix, factor.matrix.T)


def test_gram_domain_error():
    with pytest.raises(DomainError):
        gram_matrix(sobolev, [0.2, 1.5])


def test_gram_factor_read_only():
    factor = gram_matrix(sobolev, [0.2, 0.4])
    with pytest.raises(ValueError):
        factor.spectrum[0] = 0.
