"""Seeding helpers producing independent :class:`numpy.random.Generator`
streams."""
# License: GNU AGPLv3

from numbers import Integral

import numpy as np


def check_random_generator(random_state):
    """Turn `random_state` into a :class:`numpy.random.Generator`.

    Parameters
    ----------
    random_state : None, int, :class:`numpy.random.SeedSequence` or \
        :class:`numpy.random.Generator`
        ``None`` draws fresh OS entropy; a generator is returned as is.

    Returns
    -------
    rng : :class:`numpy.random.Generator`

    """
    if isinstance(random_state, np.random.Generator):
        return random_state
    if random_state is None or isinstance(random_state,
                                          (Integral, np.random.SeedSequence)):
        return np.random.default_rng(random_state)
    raise ValueError(f"{random_state!r} cannot be used to seed a "
                     f"numpy.random.Generator.")


def spawn_generators(random_state, n_streams):
    """Return `n_streams` statistically independent generators derived
    from `random_state`."""
    if isinstance(random_state, np.random.Generator):
        seed_sequence = np.random.SeedSequence(
            random_state.integers(np.iinfo(np.int64).max))
    elif isinstance(random_state, np.random.SeedSequence):
        seed_sequence = random_state
    else:
        seed_sequence = np.random.SeedSequence(random_state)
    return [np.random.default_rng(child)
            for child in seed_sequence.spawn(n_streams)]


def keyed_generator(seed, *keys):
    """Generator for the stream labelled by ``(seed, *keys)``.

    Streams with different keys are independent, and the same key always
    yields the same stream regardless of the order in which streams are
    requested.

    """
    return np.random.default_rng(
        np.random.SeedSequence([int(seed)] + [int(key) for key in keys]))
