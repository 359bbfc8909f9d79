"""Testing for the critical rate and regularization parameters."""
# License: GNU AGPLv3

import numpy as np
import pytest
from hypothesis import given
from hypothesis.strategies import floats, integers
from numpy.testing import assert_almost_equal, assert_allclose
from scipy.stats import linregress

from spamkern.exceptions import NoSolutionError
from spamkern.kernels import SpectralKernel, make_sobolev_kernel, \
    make_finite_rank_kernel, gram_matrix
from spamkern.rates import q_sigma, empirical_q_sigma, critical_rate, \
    empirical_critical_rate, make_reg_params


def test_q_sigma_values():
    kernel = make_finite_rank_kernel(1)
    assert q_sigma(0., kernel, 10) == 0.
    assert_almost_equal(q_sigma(0.5, kernel, 100), 0.05, decimal=15)


@given(m=integers(1, 10), n=integers(1, 10 ** 5),
       t=floats(min_value=0., max_value=1.))
def test_q_sigma_finite_rank_bound(m, n, t):
    kernel = make_finite_rank_kernel(m)
    assert q_sigma(t, kernel, n) <= t * np.sqrt(m / n) * (1 + 1e-12)


def test_q_sigma_monotone_structure():
    kernel = make_sobolev_kernel(1, m_trunc=500)
    grid = np.linspace(1e-4, 2., 300)
    values = np.array([q_sigma(t, kernel, 50) for t in grid])
    assert np.all(np.diff(values) >= 0)
    assert np.all(np.diff(values / grid) <= 1e-15)


def test_q_sigma_invalid():
    with pytest.raises(ValueError):
        q_sigma(-1., make_finite_rank_kernel(1), 10)
    with pytest.raises(ValueError):
        q_sigma(1., make_finite_rank_kernel(1), 0)


@pytest.mark.parametrize("m", [1, 4])
@pytest.mark.parametrize("n", [100, 400, 1600])
def test_critical_rate_finite_rank_closed_form(m, n):
    nu = critical_rate(make_finite_rank_kernel(m), n)
    assert_allclose(nu * 40 * np.sqrt(n) / np.sqrt(m), 1., rtol=1e-6)


def test_critical_rate_examples():
    assert_allclose(critical_rate(make_finite_rank_kernel(1), 1600),
                    0.000625, rtol=1e-9)
    assert_allclose(critical_rate(make_finite_rank_kernel(4), 1600),
                    0.00125, rtol=1e-9)


@pytest.mark.parametrize("kernel", [make_finite_rank_kernel(3),
                                    make_sobolev_kernel(1),
                                    make_sobolev_kernel(2)])
@pytest.mark.parametrize("n", [10, 500, 20000])
def test_critical_rate_minimality(kernel, n):
    nu = critical_rate(kernel, n)
    assert 40 * nu ** 2 >= q_sigma(nu, kernel, n)
    assert abs(40 * nu ** 2 - q_sigma(nu, kernel, n)) <= 1e-9
    smaller = nu - 1e-8 * nu
    assert 40 * smaller ** 2 < q_sigma(smaller, kernel, n)


def test_critical_rate_sobolev_band():
    kernel = make_sobolev_kernel(1)
    scaled = [critical_rate(kernel, n) ** 2 * n ** (2 / 3)
              for n in (400, 1600, 6400)]
    assert max(scaled) / min(scaled) <= 2.


@pytest.mark.parametrize("alpha, m_trunc", [(1, 10 ** 5), (2, 1000)])
def test_critical_rate_sobolev_slope(alpha, m_trunc):
    kernel = make_sobolev_kernel(alpha, m_trunc=m_trunc)
    ns = np.array([1e2, 1e3, 1e4, 1e5])
    nus = np.array([critical_rate(kernel, int(n)) for n in ns])
    slope = linregress(np.log(ns), np.log(nus ** 2)).slope
    assert abs(slope + 2 * alpha / (2 * alpha + 1)) <= 0.03


def test_critical_rate_constant():
    kernel = make_finite_rank_kernel(1)
    assert_allclose(critical_rate(kernel, 100, constant=4.),
                    1 / (4 * 10), rtol=1e-9)


def test_critical_rate_no_solution():
    with pytest.raises(NoSolutionError):
        critical_rate(SpectralKernel([0., 0.]), 10)


def test_empirical_critical_rate():
    kernel = make_finite_rank_kernel(2)
    column = np.random.default_rng(3).uniform(size=60)
    spectrum = gram_matrix(kernel, column).spectrum
    nu_hat = empirical_critical_rate(spectrum, 60)
    assert 4 * nu_hat ** 2 >= empirical_q_sigma(nu_hat, spectrum, 60)
    assert empirical_q_sigma(0.1, spectrum, 60) <= 0.1 * np.sqrt(2 / 60) \
        * (1 + 1e-10)


def test_make_reg_params_example():
    params = make_reg_params(make_finite_rank_kernel(1), 1600, 2)
    gamma = np.sqrt(np.log(2) / 1600)
    assert_allclose(params.nu_n, 0.000625, rtol=1e-9)
    assert_allclose(params.gamma_n, gamma, rtol=1e-12)
    assert_almost_equal(params.gamma_n, 0.02082, decimal=5)
    assert_allclose(params.lambda_n, 16 * gamma, rtol=1e-12)
    assert_allclose(params.rho_n, 16 * gamma ** 2, rtol=1e-12)
    assert params.kappa == 1. and params.c_mult == 16.


def test_make_reg_params_kappa_linear():
    kernel = make_sobolev_kernel(1)
    one = make_reg_params(kernel, 500, 10, kappa=1.)
    two = make_reg_params(kernel, 500, 10, kappa=2.)
    assert two.gamma_n == 2 * one.gamma_n


@pytest.mark.parametrize("kwargs", [{'c_mult': 15}, {'kappa': 0.},
                                    {'d': 1}, {'n': 1}])
def test_make_reg_params_invalid(kwargs):
    arguments = {'n': 100, 'd': 5}
    arguments.update(kwargs)
    n, d = arguments.pop('n'), arguments.pop('d')
    with pytest.raises(ValueError):
        make_reg_params(make_finite_rank_kernel(1), n, d, **arguments)
