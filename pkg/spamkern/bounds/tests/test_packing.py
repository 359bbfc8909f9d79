"""Testing for sparse packings."""
# License: GNU AGPLv3

from fractions import Fraction
from itertools import combinations, product
from math import comb, floor

import numpy as np
import pytest
from hypothesis import given
from hypothesis.strategies import integers
from numpy.testing import assert_allclose

from spamkern.bounds import PackingSet, n_star, log_n_star, \
    n_star_lower_bound, greedy_packing, pairwise_hamming, check_packing, \
    packing_to_functions, packing_diameter_scale
from spamkern.exceptions import InsufficientFamilyError
from spamkern.kernels import make_finite_rank_kernel, make_sobolev_kernel


def _exact_n_star(d, s, alphabet):
    return Fraction(1, 2) * Fraction(comb(d, s), comb(d, s // 2)) \
        * Fraction(alphabet ** s, (alphabet + 1) ** (s // 2))


@pytest.mark.parametrize("d, s, alphabet, expected",
                         [(4, 2, 1, 0.375), (12, 2, 3, 12.375)])
def test_n_star_examples(d, s, alphabet, expected):
    assert_allclose(n_star(d, s, alphabet), expected, rtol=1e-12)


@given(d=integers(2, 20), half=integers(1, 10), alphabet=integers(1, 6))
def test_n_star_exact(d, half, alphabet):
    s = min(2 * half, d - d % 2)
    assert_allclose(n_star(d, s, alphabet),
                    float(_exact_n_star(d, s, alphabet)), rtol=1e-10)
    assert_allclose(log_n_star(d, s, alphabet),
                    np.log(float(_exact_n_star(d, s, alphabet))), atol=1e-10)
    assert n_star_lower_bound(d, s, alphabet) \
        <= n_star(d, s, alphabet) * (1 + 1e-12)


def test_n_star_monotone_in_alphabet():
    values = [n_star(16, 4, alphabet) for alphabet in range(1, 20)]
    assert np.all(np.diff(values) > 0)


def test_n_star_large_arguments():
    assert np.isfinite(log_n_star(10 ** 6, 1000, 50))


@pytest.mark.parametrize("d, s, alphabet", [(6, 3, 1), (4, 6, 1),
                                            (0, 2, 1), (4, 2, 0)])
def test_n_star_invalid(d, s, alphabet):
    with pytest.raises(ValueError):
        n_star(d, s, alphabet)


def test_greedy_single_codeword():
    packing = greedy_packing(4, 2, 1, 1, random_state=0)
    assert len(packing) == 1
    assert packing.min_distance == 1
    assert check_packing(packing)


@pytest.mark.parametrize("d, s, alphabet", [(8, 2, 2), (12, 2, 3),
                                            (16, 4, 2)])
def test_greedy_reaches_guarantee(d, s, alphabet):
    target = floor(n_star(d, s, alphabet))
    packing = greedy_packing(d, s, alphabet, target, random_state=1)
    assert len(packing) == target
    assert check_packing(packing, s=s)
    distances = pairwise_hamming(packing.codewords)
    assert np.all(distances[np.triu_indices(target, 1)] >= -(-s // 2))


def _maximum_packing_size(d, s, min_distance):
    words = [np.isin(np.arange(d), support).astype(int)
             for support in combinations(range(d), s)]
    best = 0

    def extend(chosen, start):
        nonlocal best
        best = max(best, len(chosen))
        if len(chosen) + len(words) - start <= best:
            return
        for i in range(start, len(words)):
            if all(np.count_nonzero(words[i] != words[j]) >= min_distance
                   for j in chosen):
                extend(chosen + [i], i + 1)

    extend([], 0)
    return best


def test_greedy_against_maximum_packing():
    maximum = _maximum_packing_size(6, 2, 1)
    packing = greedy_packing(6, 2, 1, 100, random_state=2)
    assert 1 <= len(packing) <= maximum
    assert check_packing(packing)


def test_greedy_odd_sparsity():
    packing = greedy_packing(7, 3, 2, 50, random_state=3)
    assert packing.min_distance == 2
    assert check_packing(packing, s=3)


def test_greedy_sampled_code():
    packing = greedy_packing(200, 4, 3, 40, random_state=4)
    assert len(packing) == 40
    assert check_packing(packing, s=4)


def test_greedy_deterministic():
    first = greedy_packing(10, 2, 2, 30, random_state=5)
    second = greedy_packing(10, 2, 2, 30, random_state=5)
    np.testing.assert_array_equal(first.codewords, second.codewords)


def test_check_packing_detects_violations():
    codewords = np.array([[1, 1, 0, 0], [1, 1, 0, 0]])
    assert not check_packing(PackingSet(1, codewords, 1))
    assert not check_packing(PackingSet(1, np.array([[1, 2, 0, 0]]), 1))
    assert check_packing(PackingSet(1, np.zeros((0, 4), dtype=int), 1))


def test_packing_to_functions_separation():
    kernel = make_finite_rank_kernel(2)
    packing = greedy_packing(8, 2, 2, floor(n_star(8, 2, 2)),
                             random_state=6)
    coeffs = packing_to_functions(packing, kernel, 1.)
    assert coeffs.shape == (len(packing), 8, 2)
    flat = coeffs.reshape(len(packing), -1)
    distances = pairwise_hamming(packing.codewords)
    for i, j in combinations(range(len(packing)), 2):
        squared = np.sum((flat[i] - flat[j]) ** 2)
        assert squared >= 1. - 1e-12
        assert squared >= distances[i, j] / 2 - 1e-12
    assert_allclose(np.sum((flat[0] - flat[0]) ** 2), 0.)


def test_packing_to_functions_disjoint_codewords():
    kernel = make_finite_rank_kernel(3)
    codewords = np.array([[1, 2, 0, 0], [0, 0, 3, 1]])
    coeffs = packing_to_functions(PackingSet(3, codewords, 1), kernel, 0.5)
    # Four nonzero components of squared amplitude 0.25 / 2.
    assert_allclose(np.sum((coeffs[0] - coeffs[1]) ** 2), 4 * 0.125)


def test_packing_to_functions_insufficient_family():
    packing = greedy_packing(8, 2, 3, 5, random_state=7)
    with pytest.raises(InsufficientFamilyError):
        packing_to_functions(packing, make_finite_rank_kernel(2), 1.)
    with pytest.raises(InsufficientFamilyError):
        packing_to_functions(packing, make_sobolev_kernel(1, m_trunc=10),
                             1.)


def test_packing_diameter_scale():
    delta, s = 0.01, 2
    kernel = make_sobolev_kernel(1, m_trunc=10)
    packing = greedy_packing(8, s, 2, 10, random_state=8)
    scale = np.sqrt(s) * packing_diameter_scale(delta, s)
    assert_allclose(scale, np.sqrt(8) * delta)
    flat = packing_to_functions(packing, kernel, scale).reshape(
        len(packing), -1)
    for i, j in combinations(range(len(packing)), 2):
        distance = np.linalg.norm(flat[i] - flat[j])
        assert delta <= distance <= 8 * delta
