"""Testing for spectral kernels."""
# License: GNU AGPLv3

import numpy as np
import pytest
from hypothesis import given
from hypothesis.strategies import floats, integers
from numpy.testing import assert_almost_equal, assert_allclose

from spamkern.exceptions import DomainError, InfeasibleCoefficientError
from spamkern.kernels import SpectralKernel, make_sobolev_kernel, \
    make_finite_rank_kernel, eval_kernel, hilbert_norm_sq, kernel_sup_bound

unit_floats = floats(min_value=0., max_value=1.)


@pytest.mark.parametrize("alpha, m_trunc, expected",
                         [(1, 3, [1., 1 / 4, 1 / 9]),
                          (2, 2, [1., 1 / 16])])
def test_sobolev_eigenvalues(alpha, m_trunc, expected):
    kernel = make_sobolev_kernel(alpha, m_trunc=m_trunc)
    assert_allclose(kernel.eigenvalues, expected, rtol=1e-15)
    assert kernel.m_trunc == m_trunc


@pytest.mark.parametrize("alpha", [0.5, 0.1, -1])
def test_sobolev_invalid_alpha(alpha):
    with pytest.raises(ValueError):
        make_sobolev_kernel(alpha)


def test_finite_rank_invalid():
    with pytest.raises(ValueError):
        make_finite_rank_kernel(0)
    with pytest.raises(TypeError):
        make_finite_rank_kernel(2.5)


@pytest.mark.parametrize("scale", [0.25, 16])
def test_eigenvalue_scale(scale):
    sobolev = make_sobolev_kernel(1, m_trunc=3, scale=scale)
    assert_allclose(sobolev.eigenvalues, scale * np.array([1., 1 / 4, 1 / 9]),
                    rtol=1e-15)
    finite = make_finite_rank_kernel(2, scale=scale)
    assert_allclose(finite.eigenvalues, [scale, scale])
    assert "scale" in repr(finite)
    assert_allclose(eval_kernel(finite, 0., 0.),
                    scale * eval_kernel(make_finite_rank_kernel(2), 0., 0.))
    assert make_finite_rank_kernel(2, scale=1.) == make_finite_rank_kernel(2)


@pytest.mark.parametrize("scale", [0, -1., np.inf])
def test_eigenvalue_scale_invalid(scale):
    with pytest.raises(ValueError):
        make_finite_rank_kernel(2, scale=scale)
    with pytest.raises(ValueError):
        make_sobolev_kernel(1, scale=scale)


@pytest.mark.parametrize("eigenvalues", [[1., 2.], [1., -0.1], [],
                                         [np.nan]])
def test_spectral_kernel_invalid_eigenvalues(eigenvalues):
    with pytest.raises(ValueError):
        SpectralKernel(eigenvalues)


def test_kernel_is_immutable():
    kernel = make_finite_rank_kernel(3)
    with pytest.raises(ValueError):
        kernel.eigenvalues[0] = 5.


def test_eval_kernel_closed_forms():
    rank_one = make_finite_rank_kernel(1)
    assert_almost_equal(eval_kernel(rank_one, 0., 0.25), 0., decimal=15)
    assert_almost_equal(eval_kernel(rank_one, 0.1, 0.3),
                        2 * np.cos(0.2 * np.pi) * np.cos(0.6 * np.pi))
    assert_almost_equal(eval_kernel(make_finite_rank_kernel(2), 0., 0.), 4.)


def test_eval_kernel_sobolev_partial_sum():
    kernel = make_sobolev_kernel(1, m_trunc=1000)
    expected = 2 * np.sum(np.arange(1, 1001, dtype=float) ** -2)
    assert_allclose(eval_kernel(kernel, 0., 0.), expected, rtol=1e-12)
    assert_almost_equal(eval_kernel(kernel, 0., 0.), 3.2879, decimal=4)


@given(x=unit_floats, y=unit_floats)
def test_eval_kernel_symmetric(x, y):
    kernel = make_sobolev_kernel(1.5, m_trunc=50)
    assert eval_kernel(kernel, x, y) == eval_kernel(kernel, y, x)


@pytest.mark.parametrize("x, y", [(-0.1, 0.5), (0.5, 1.01)])
def test_eval_kernel_domain_error(x, y):
    with pytest.raises(DomainError):
        eval_kernel(make_finite_rank_kernel(1), x, y)


def test_hilbert_norm_sq():
    kernel = make_sobolev_kernel(1, m_trunc=10)
    assert hilbert_norm_sq(np.zeros(10), kernel) == 0.
    assert_almost_equal(hilbert_norm_sq([0.5, 0.25], kernel), 0.5,
                        decimal=15)
    mu = kernel.eigenvalues
    assert_allclose(hilbert_norm_sq(mu / np.sqrt(mu.sum()), kernel), 1.,
                    rtol=1e-14)


def test_hilbert_norm_sq_infeasible():
    kernel = SpectralKernel([1., 0.5, 0.])
    assert_almost_equal(hilbert_norm_sq([1., 0., 0., 0.], kernel), 1.)
    with pytest.raises(InfeasibleCoefficientError):
        hilbert_norm_sq([1., 0., 0.1], kernel)
    with pytest.raises(InfeasibleCoefficientError):
        hilbert_norm_sq([1., 0., 0., 0.2], kernel)


def test_kernel_sup_bound():
    assert_almost_equal(kernel_sup_bound(make_finite_rank_kernel(1)),
                        np.sqrt(2), decimal=12)
    sobolev = make_sobolev_kernel(1, m_trunc=1000)
    expected = np.sqrt(2 * np.sum(np.arange(1, 1001, dtype=float) ** -2))
    assert_allclose(kernel_sup_bound(sobolev), expected, rtol=1e-12)
    assert_almost_equal(kernel_sup_bound(sobolev), 1.8133, decimal=4)


@given(m=integers(min_value=1, max_value=20))
def test_kernel_sup_bound_finite_rank(m):
    assert kernel_sup_bound(make_finite_rank_kernel(m)) <= \
        np.sqrt(2 * m) + 1e-12


@pytest.mark.parametrize("kernel", [make_sobolev_kernel(1, m_trunc=40),
                                    make_finite_rank_kernel(4)])
def test_check_basis(kernel):
    assert kernel.check_basis() <= 1e-6


def test_check_basis_even_nodes():
    with pytest.raises(ValueError):
        make_finite_rank_kernel(2).check_basis(n_nodes=100)
