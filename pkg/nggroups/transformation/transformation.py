from __future__ import print_function, division

import re

import numpy as np

from ..utils.validator import validate_images, validate_integer

__all__ = ['Transformation', 'ImageSet', 'compose', 'power', 'image',
           'rank', 'kernel_partition', 'is_idempotent', 'is_bijective']

TUPLE_PATTERN = re.compile(r'^\s*\((\s*\d+\s*(?:,\s*\d+\s*)*)\)\s*$')


class Transformation(object):
    """
    A total map from {1..n} to itself.

    The map is given in one-line notation: entry ``x`` (counting from 1) of
    ``images`` is the image f(x). Instances are immutable and hashable, and
    two transformations are equal when they have the same degree and the same
    images.

    Parameters
    ----------
    images : sequence of int
        The images f(1), ..., f(n), each in the range [1:n].
    """

    __slots__ = ('_map', '_key')

    def __init__(self, images):
        self._map = validate_images('images', images)
        self._key = tuple(int(v) + 1 for v in self._map)

    @classmethod
    def identity(cls, n):
        """
        The identity map on {1..n}
        """
        n = validate_integer('n', n, domain='strictly-positive')
        return cls(np.arange(1, n + 1))

    @classmethod
    def _from_map(cls, array):
        # array is 0-indexed and already known to be valid
        self = cls.__new__(cls)
        array = np.array(array, dtype=np.intp)
        array.flags.writeable = False
        self._map = array
        self._key = tuple(int(v) + 1 for v in array)
        return self

    @property
    def n(self):
        """
        The degree of the transformation
        """
        return len(self._key)

    @property
    def images(self):
        """
        The images f(1), ..., f(n) as a tuple of int
        """
        return self._key

    @property
    def array(self):
        """
        The 0-indexed images as a read-only Numpy array
        """
        return self._map

    def __call__(self, x):
        x = validate_integer('x', x, domain=(1, self.n))
        return self._key[x - 1]

    def __mul__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return self._key == other._key

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __lt__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return (self.n, self._key) < (other.n, other._key)

    def __hash__(self):
        return hash(self._key)

    def __len__(self):
        return self.n

    def __repr__(self):
        return "Transformation({0})".format(self.to_string())

    def __str__(self):
        return self.to_string()

    def to_string(self):
        return "(" + ",".join(str(v) for v in self._key) + ")"

    @classmethod
    def from_string(cls, text):
        """
        Parse the tuple notation ``(a1,a2,...,an)``; spaces are tolerated.
        """
        match = TUPLE_PATTERN.match(text)
        if match is None:
            raise ValueError("could not parse transformation from '{0}'".format(text.strip()))
        return cls([int(token) for token in match.group(1).split(',')])

    def to_list(self):
        return list(self._key)

    @classmethod
    def from_list(cls, values):
        return cls(list(values))


class ImageSet(object):
    """
    The image Im(f) of a transformation, as a sorted set of points.
    """

    def __init__(self, points):
        self.points = tuple(sorted(set(int(x) for x in points)))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x):
        return x in self.points

    def __eq__(self, other):
        if isinstance(other, ImageSet):
            return self.points == other.points
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return "ImageSet({0})".format(self)

    def __str__(self):
        return "{" + ",".join(str(x) for x in self.points) + "}"

    def to_list(self):
        return list(self.points)


def _check_degrees(f, g):
    if f.n != g.n:
        raise ValueError("degree mismatch: {0} and {1}".format(f.n, g.n))


def compose(f, g):
    """
    Compose two transformations.

    The product ``fg`` applies ``g`` first, then ``f``, i.e. (fg)(x) =
    f(g(x)).

    Parameters
    ----------
    f, g : :class:`Transformation`
        Transformations of the same degree.

    Returns
    -------
    fg : :class:`Transformation`
    """
    _check_degrees(f, g)
    return Transformation._from_map(f._map[g._map])


def power(f, k):
    """
    The k-th power of ``f`` (``k`` >= 1).
    """
    k = validate_integer('k', k, domain='strictly-positive')
    result = f._map
    # square-and-multiply on the index arrays
    base = f._map
    k -= 1
    while k > 0:
        if k & 1:
            result = base[result]
        base = base[base]
        k >>= 1
    return Transformation._from_map(result)


def image(f):
    """
    The image Im(f) as an :class:`ImageSet`.
    """
    return ImageSet(np.unique(f._map) + 1)


def rank(f):
    """
    The number of points in the image of ``f``.
    """
    return len(np.unique(f._map))


def kernel_partition(f):
    """
    The kernel partition R_f, whose blocks are the fibers of ``f``.

    Returns
    -------
    partition : :class:`~nggroups.quotient.Partition`
    """
    from ..quotient.partition import Partition
    return Partition.from_labels(f._map)


def is_idempotent(f):
    return bool(np.all(f._map[f._map] == f._map))


def is_bijective(f):
    return rank(f) == f.n
