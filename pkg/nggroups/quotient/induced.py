from __future__ import print_function, division

import numpy as np

from ..transformation import kernel_partition
from .partition import Partition

__all__ = ['InducedMap', 'induced_map', 'is_induced_identity',
           'is_induced_bijective']


class InducedMap(object):
    """
    The map [x] -> [f(x)] induced by a transformation on the blocks of a
    partition.

    Blocks are referred to by their index in the canonical block order of
    ``source``. A block whose points are not all sent inside one block is
    ill-defined and maps to `None`.

    Parameters
    ----------
    source : :class:`~nggroups.quotient.Partition`
        The partition the map acts on.
    mapping : sequence
        For each block index, the index of the image block, or `None`.
    """

    __slots__ = ('_source', '_mapping')

    def __init__(self, source, mapping):
        if not isinstance(source, Partition):
            raise TypeError("source should be a Partition instance")
        mapping = tuple(None if m is None else int(m) for m in mapping)
        if len(mapping) != len(source):
            raise ValueError("mapping has incorrect length (expected {0} but found {1})".format(len(source), len(mapping)))
        for m in mapping:
            if m is not None and not 0 <= m < len(source):
                raise ValueError("mapping values should be in the range [0:{0}]".format(len(source) - 1))
        self._source = source
        self._mapping = mapping

    @property
    def source(self):
        return self._source

    @property
    def mapping(self):
        return self._mapping

    @property
    def is_well_defined(self):
        return None not in self._mapping

    @property
    def ill_defined_blocks(self):
        """
        The blocks (as tuples of points) that are not sent inside one block
        """
        return tuple(self._source.blocks[i] for i, m in enumerate(self._mapping) if m is None)

    def image_of(self, block):
        """
        The image of a block, given as a tuple of points, or `None`.
        """
        index = self._source.block_index(block[0])
        if tuple(block) != self._source.blocks[index]:
            raise ValueError("{0} is not a block of {1}".format(tuple(block), self._source))
        m = self._mapping[index]
        return None if m is None else self._source.blocks[m]

    def is_injective(self):
        return self.is_well_defined and len(set(self._mapping)) == len(self._mapping)

    def is_surjective(self):
        return self.is_well_defined and set(self._mapping) == set(range(len(self._mapping)))

    def is_bijective(self):
        return self.is_injective() and self.is_surjective()

    def is_identity(self):
        return self._mapping == tuple(range(len(self._mapping)))

    def compose(self, other):
        """
        The block map applying ``other`` first, then this map.
        """
        if self._source != other._source:
            raise ValueError("induced maps act on different partitions")
        if not (self.is_well_defined and other.is_well_defined):
            raise ValueError("cannot compose ill-defined induced maps")
        return InducedMap(self._source, [self._mapping[m] for m in other._mapping])

    def __mul__(self, other):
        if not isinstance(other, InducedMap):
            return NotImplemented
        return self.compose(other)

    def __eq__(self, other):
        if not isinstance(other, InducedMap):
            return NotImplemented
        return self._source == other._source and self._mapping == other._mapping

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._source, self._mapping))

    def __repr__(self):
        return "InducedMap({0})".format(self)

    def __str__(self):
        parts = []
        for block, m in zip(self._source.blocks, self._mapping):
            target = '?' if m is None else _format_block(self._source.blocks[m])
            parts.append("{0}->{1}".format(_format_block(block), target))
        return ", ".join(parts)

    def to_list(self):
        """
        Image block numbers counted from 1, with `None` for ill-defined blocks.
        """
        return [None if m is None else m + 1 for m in self._mapping]

    @classmethod
    def from_list(cls, source, values):
        return cls(source, [None if v is None else v - 1 for v in values])


def _format_block(block):
    return "{" + ",".join(str(x) for x in block) + "}"


def induced_map(f, p):
    """
    The map induced by ``f`` on the blocks of ``p``.

    Parameters
    ----------
    f : :class:`~nggroups.transformation.Transformation`
    p : :class:`~nggroups.quotient.Partition`
        A partition of the same degree as ``f``.

    Returns
    -------
    induced : :class:`InducedMap`
    """
    if f.n != p.n:
        raise ValueError("degree mismatch: {0} and {1}".format(f.n, p.n))
    targets = p.labels[f.array]
    mapping = []
    for block in p.blocks:
        values = np.unique(targets[np.array(block) - 1])
        mapping.append(int(values[0]) if len(values) == 1 else None)
    return InducedMap(p, mapping)


def is_induced_identity(f):
    return induced_map(f, kernel_partition(f)).is_identity()


def is_induced_bijective(f):
    return induced_map(f, kernel_partition(f)).is_bijective()
