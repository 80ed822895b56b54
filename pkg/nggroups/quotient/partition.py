from __future__ import print_function, division

import re

import numpy as np

from ..utils.validator import validate_integer

__all__ = ['Partition', 'block_of']

_BLOCK = r'\{\s*\d+\s*(?:,\s*\d+\s*)*\}'
BLOCK_PATTERN = re.compile(r'\{([^{}]*)\}')
PARTITION_PATTERN = re.compile(r'^\s*\{\s*' + _BLOCK + r'\s*(?:,\s*' + _BLOCK + r'\s*)*\}\s*$')


class Partition(object):
    """
    An equivalence relation on {1..n}, stored as its set of blocks.

    The blocks are kept in canonical form: each block is sorted in
    ascending order and blocks are sorted by their least element.

    Parameters
    ----------
    blocks : iterable of iterables of int
        Pairwise disjoint, nonempty blocks whose union is {1..n}.
    n : int, optional
        The degree. If not given, it is taken to be the largest point.
    """

    __slots__ = ('_blocks', '_labels')

    def __init__(self, blocks, n=None):

        blocks = [tuple(sorted(validate_integer('point', x) for x in block))
                  for block in blocks]

        if len(blocks) == 0:
            raise ValueError("blocks should not be empty")

        for block in blocks:
            if len(block) == 0:
                raise ValueError("blocks should be nonempty")

        points = [x for block in blocks for x in block]

        if n is None:
            n = max(points)
        n = validate_integer('n', n, domain='strictly-positive')

        if len(points) != len(set(points)):
            raise ValueError("blocks should be pairwise disjoint")
        if sorted(points) != list(range(1, n + 1)):
            raise ValueError("blocks should cover the points 1 to {0}".format(n))

        labels = np.zeros(n, dtype=np.intp)
        for block in blocks:
            labels[np.array(block) - 1] = block[0]
        self._set_labels(labels)

    def _set_labels(self, labels):
        # relabel blocks by order of their least element
        _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
        order = np.empty(len(first), dtype=np.intp)
        order[np.argsort(first)] = np.arange(len(first))
        self._labels = order[inverse.ravel()]
        self._labels.flags.writeable = False
        blocks = [[] for _ in range(len(first))]
        for x, label in enumerate(self._labels):
            blocks[label].append(x + 1)
        self._blocks = tuple(tuple(block) for block in blocks)

    @classmethod
    def from_labels(cls, labels):
        """
        Build the partition whose blocks are the level sets of ``labels``
        (an array with one arbitrary label per point, point 1 first).
        """
        self = cls.__new__(cls)
        self._set_labels(np.asarray(labels))
        return self

    @classmethod
    def discrete(cls, n):
        return cls([[x] for x in range(1, n + 1)], n=n)

    @property
    def n(self):
        return len(self._labels)

    @property
    def blocks(self):
        """
        The blocks, as a tuple of sorted tuples in canonical order
        """
        return self._blocks

    @property
    def labels(self):
        """
        The index of the block containing each point, as a Numpy array
        """
        return self._labels

    def block_index(self, x):
        """
        The (0-based) index of the block containing the point ``x``.
        """
        x = validate_integer('x', x, domain=(1, self.n))
        return int(self._labels[x - 1])

    def canonical(self):
        return Partition(self._blocks, n=self.n)

    def __len__(self):
        return len(self._blocks)

    def __iter__(self):
        return iter(self._blocks)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._blocks == other._blocks

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._blocks)

    def __repr__(self):
        return "Partition({0})".format(self.to_string())

    def __str__(self):
        return self.to_string()

    def to_string(self):
        return "{" + ",".join("{" + ",".join(str(x) for x in block) + "}"
                              for block in self._blocks) + "}"

    @classmethod
    def from_string(cls, text):
        """
        Parse the notation ``{{1,2},{3}}``.

        The whole string should match the notation; anything outside the
        blocks other than commas and spaces is rejected.
        """
        if PARTITION_PATTERN.match(text) is None:
            raise ValueError("could not parse partition from '{0}'".format(text.strip()))
        blocks = [[int(token) for token in match.group(1).split(',')]
                  for match in BLOCK_PATTERN.finditer(text.strip()[1:-1])]
        return cls(blocks)

    def to_list(self):
        return [list(block) for block in self._blocks]

    @classmethod
    def from_list(cls, blocks):
        return cls(blocks)


def block_of(p, x):
    """
    The block of the partition ``p`` that contains the point ``x``.
    """
    return p.blocks[p.block_index(x)]
