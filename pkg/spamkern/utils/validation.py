"""Utilities for input validation."""
# License: GNU AGPLv3

import numpy as np
from sklearn.utils.validation import check_array

from ..exceptions import DimensionMismatchError, DomainError


def check_unit_interval(X, name="X", ensure_2d=True):
    """Input validation for points of the unit cube.

    Parameters
    ----------
    X : array-like
        Input object to check/convert. A design matrix of shape
        ``(n_samples, n_coordinates)`` if `ensure_2d` is ``True``, a
        one-dimensional column otherwise.

    name : str, optional, default: ``'X'``
        Name used in error messages.

    ensure_2d : bool, optional, default: ``True``
        Whether a 2D array is required.

    Returns
    -------
    X_validated : ndarray of float
        The converted and validated array.

    """
    X_array = check_array(X, ensure_2d=ensure_2d, dtype=np.float64,
                          ensure_min_samples=1)
    if not ensure_2d and X_array.ndim != 1:
        raise ValueError(
            f"`{name}` should be one-dimensional, the shape is "
            f"{X_array.shape}.")
    n_outside = np.count_nonzero((X_array < 0.) | (X_array > 1.))
    if n_outside:
        raise DomainError(
            f"All entries of `{name}` should lie in [0, 1]. {n_outside} "
            f"entries are outside.")
    return X_array


def check_responses(y, n_samples=None):
    """Input validation for a vector of real responses, optionally checking
    its length against `n_samples`."""
    y_array = check_array(y, ensure_2d=False, dtype=np.float64)
    if y_array.ndim != 1:
        raise ValueError(
            f"Responses should be one-dimensional, the shape is "
            f"{y_array.shape}.")
    if n_samples is not None and len(y_array) != n_samples:
        raise DimensionMismatchError(
            f"Design has {n_samples} rows but {len(y_array)} responses "
            f"were passed.")
    return y_array


_CONTAINER_TYPES = (list, tuple, np.ndarray)


def _is_flag_for_number(value, ref_type):
    # bool subclasses int: a flag must not pass as a rank, a sample size or
    # a tolerance unless the reference explicitly allows it.
    if not isinstance(value, (bool, np.bool_)):
        return False
    allowed = ref_type if isinstance(ref_type, tuple) else (ref_type,)
    return bool not in allowed


def _check_value(value, reference, name):
    """Check one value against its reference dictionary, descending into
    lists, tuples, arrays and nested parameter dictionaries."""
    if reference is None:
        return

    ref_type = reference.get('type', None)
    if ref_type is not None and (not isinstance(value, ref_type)
                                 or _is_flag_for_number(value, ref_type)):
        raise TypeError(f"Parameter `{name}` is of type {type(value)} while "
                        f"it should be of type {ref_type}.")

    ref_of = reference.get('of', None)
    if isinstance(value, dict):
        # 'of' holds a full references dictionary for the nested keys
        if ref_of is not None:
            _validate_params(value, ref_of, rec_name=name)
    elif isinstance(value, _CONTAINER_TYPES):
        # 'of' is applied entry by entry, with indexed names in messages
        for i, entry in enumerate(value):
            _check_value(entry, ref_of, f"{name}[{i}]")
    else:
        ref_in = reference.get('in', None)
        if value is not None and ref_in is not None and value not in ref_in:
            raise ValueError(f"Parameter `{name}` is {value}, which is not "
                             f"in {ref_in}.")
        ref_other = reference.get('other', None)
        if ref_other is not None:
            ref_other(value)


def _validate_params(parameters, references, rec_name=None):
    for name, parameter in parameters.items():
        if name not in references:
            name_extras = "" if rec_name is None else f" in `{rec_name}`"
            raise KeyError(f"`{name}`{name_extras} is not an available "
                           f"parameter. Available parameters are in "
                           f"{tuple(references.keys())}.")
        _check_value(parameter, references[name], name)


def validate_params(parameters, references, exclude=None):
    """Validate (hyper)parameters against reference descriptions.

    Parameters
    ----------
    parameters : dict, required
        Parameter names mapped to values. Every key not in `exclude` must
        also be a key of `references`.

    references : dict, required
        Parameter names mapped to dictionaries with any of the keys:

        - ``'type'``: class or tuple of classes the value must be an
          instance of.

        - ``'in'``: container (typically an
          :class:`~spamkern.utils.intervals.Interval`) the value must
          belong to. Only used for scalar values.

        - ``'of'``: for list, tuple or ndarray types, a reference
          dictionary applied to every entry; for dict types, a nested
          `references` dictionary.

        - ``'other'``: callable performing custom checks.

    exclude : list or None, optional, default: ``None``
        Keys of `parameters` which are not validated.

    Raises
    ------
    TypeError
        When a value has the wrong type. Booleans are not accepted where
        an integer or a real number is expected, unless ``bool`` is listed
        in ``'type'``.

    ValueError
        When a value is outside its admissible range.

    KeyError
        When a parameter name is unknown.

    """
    exclude_ = [] if exclude is None else exclude
    parameters_ = {key: value for key, value in parameters.items()
                   if key not in exclude_}
    return _validate_params(parameters_, references)
