"""Tests for seeding helpers."""
# License: GNU AGPLv3

import numpy as np
import pytest
from numpy.testing import assert_array_equal

from spamkern.utils import check_random_generator, spawn_generators, \
    keyed_generator


def test_check_random_generator():
    rng = np.random.default_rng(0)
    assert check_random_generator(rng) is rng
    assert_array_equal(check_random_generator(3).uniform(size=4),
                       np.random.default_rng(3).uniform(size=4))
    assert isinstance(check_random_generator(None), np.random.Generator)

    with pytest.raises(ValueError):
        check_random_generator('seed')


def test_spawn_generators_independent_and_reproducible():
    first = [g.uniform(size=5) for g in spawn_generators(7, 3)]
    second = [g.uniform(size=5) for g in spawn_generators(7, 3)]
    for a, b in zip(first, second):
        assert_array_equal(a, b)
    assert not np.array_equal(first[0], first[1])


def test_keyed_generator_order_free():
    key = (0, 100, 10, 2, 1)
    reference = keyed_generator(*key).uniform(size=5)
    keyed_generator(0, 100, 10, 2, 0).uniform(size=5)
    assert_array_equal(keyed_generator(*key).uniform(size=5), reference)
    assert not np.array_equal(keyed_generator(0, 100, 10, 2, 0)
                              .uniform(size=5), reference)
