"""Real intervals used as admissible ranges for parameters."""
# License: GNU AGPLv3

from numbers import Real


class Interval:
    """Immutable real interval supporting membership tests.

    Parameters
    ----------
    left : real scalar, required
        Left endpoint, possibly ``-numpy.inf``.

    right : real scalar, required
        Right endpoint, possibly ``numpy.inf``.

    closed : ``'right'`` | ``'left'`` | ``'both'`` | ``'neither'``, required
        Which endpoints belong to the interval.

    Examples
    --------
    >>> from spamkern.utils.intervals import Interval
    >>> 0.5 in Interval(0.5, 1, closed='right')
    False

    """
    _VALID_CLOSED = frozenset(['left', 'right', 'both', 'neither'])

    def __init__(self, left, right, *, closed):
        for endpoint in (left, right):
            if not isinstance(endpoint, Real):
                raise ValueError(
                    f"Interval endpoints must be real numbers, "
                    f"{endpoint!r} passed.")
        if closed not in self._VALID_CLOSED:
            raise ValueError(
                f"Invalid option for `closed`: {closed}. Argument must be "
                f"one of {sorted(self._VALID_CLOSED)}.")
        if not left <= right:
            raise ValueError("Left endpoint of interval must be <= right "
                             "endpoint.")

        self.left = left
        self.right = right
        self.closed = closed

    @property
    def closed_left(self):
        return self.closed in ('left', 'both')

    @property
    def closed_right(self):
        return self.closed in ('right', 'both')

    def __contains__(self, key):
        if isinstance(key, Interval):
            raise TypeError("Membership of an interval in an interval is "
                            "not defined.")
        above = self.left <= key if self.closed_left else self.left < key
        below = key <= self.right if self.closed_right else key < self.right
        return bool(above and below)

    def __eq__(self, other):
        if not isinstance(other, Interval):
            return NotImplemented
        return (self.left, self.right, self.closed) == \
            (other.left, other.right, other.closed)

    def __hash__(self):
        return hash((self.left, self.right, self.closed))

    def __repr__(self):
        return f"{type(self).__name__}({self.left!r}, {self.right!r}, " \
               f"closed={self.closed!r})"

    def __str__(self):
        start_symbol = '[' if self.closed_left else '('
        end_symbol = ']' if self.closed_right else ')'
        return f"{start_symbol}{self.left}, {self.right}{end_symbol}"
