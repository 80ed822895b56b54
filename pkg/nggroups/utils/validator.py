from __future__ import print_function, division

import numbers

import numpy as np


def validate_integer(name, value, domain=None):

    if isinstance(value, (bool, np.bool_)) or not isinstance(value, numbers.Integral):
        raise TypeError("{0} should be an integer".format(name))

    value = int(value)

    if domain == 'positive':
        if value < 0:
            raise ValueError("{0} should be positive".format(name))
    elif domain == 'strictly-positive':
        if value <= 0:
            raise ValueError("{0} should be strictly positive".format(name))
    elif type(domain) in [tuple, list] and len(domain) == 2:
        if value < domain[0] or value > domain[-1]:
            raise ValueError("{0} should be in the range [{1}:{2}]".format(name, domain[0], domain[-1]))

    return value


def validate_images(name, value):
    """
    Check that ``value`` is the one-line (1-indexed) notation of a total map
    on {1..n} and return it as a read-only 0-indexed integer array.
    """

    # First convert to a Numpy array:
    if type(value) in [list, tuple]:
        value = np.array(value)

    if not isinstance(value, np.ndarray) or value.ndim != 1:
        raise TypeError("{0} should be a 1-d sequence".format(name))

    if len(value) == 0:
        raise ValueError("{0} should not be empty".format(name))

    if value.dtype.kind == 'O':
        # integers too large for a native dtype
        if not all(isinstance(v, numbers.Integral) and not isinstance(v, bool) for v in value):
            raise TypeError("{0} should contain integers".format(name))
        if any(v < 1 or v > len(value) for v in value):
            raise ValueError("{0} should be in the range [1:{1}]".format(name, len(value)))
    elif value.dtype.kind == 'f':
        if np.any(value.astype(int) != value):
            raise TypeError("{0} should contain integers".format(name))
    elif value.dtype.kind not in 'iu':
        raise TypeError("{0} should contain integers".format(name))

    n = len(value)
    value = value.astype(np.intp)

    if np.any((value < 1) | (value > n)):
        raise ValueError("{0} should be in the range [1:{1}]".format(name, n))

    value = value - 1
    value.flags.writeable = False

    return value
