from __future__ import print_function, division

import numpy as np
from astropy.table import Table

from ..transformation import Transformation

__all__ = ['CayleyTable', 'ESCAPE']

ESCAPE = -1


class CayleyTable(object):
    """
    The composition table of a finite set of transformations.

    Elements are sorted canonically (lexicographically on their image
    tuples). Cell ``(i, j)`` of ``table`` holds the index of the product
    ``elements[i] * elements[j]`` (apply ``elements[j]`` first), or
    ``ESCAPE`` when the product is not in the set, in which case the
    product itself is kept in ``escapes``.

    Parameters
    ----------
    elements : iterable of :class:`~nggroups.transformation.Transformation`
        Transformations of a single degree.
    """

    def __init__(self, elements):

        elements = tuple(sorted(set(elements)))

        if len(elements) == 0:
            raise ValueError("elements should not be empty")

        if len(set(f.n for f in elements)) > 1:
            raise ValueError("degree mismatch: elements should all have the same degree")

        self.elements = elements
        self._index = dict((f, i) for i, f in enumerate(elements))

        m = len(elements)
        maps = np.array([f.array for f in elements])

        self.table = np.full((m, m), ESCAPE, dtype=np.intp)
        self.escapes = {}

        for i in range(m):
            # row[j] = elements[i] o elements[j], one (m, n) block at a time
            row = maps[i][maps]
            for j in range(m):
                product = Transformation._from_map(row[j])
                k = self._index.get(product)
                if k is None:
                    self.escapes[(i, j)] = product
                else:
                    self.table[i, j] = k

        self.table.flags.writeable = False

    def __len__(self):
        return len(self.elements)

    def index(self, f):
        """
        The position of ``f`` in the canonical element order.
        """
        try:
            return self._index[f]
        except KeyError:
            raise ValueError("{0} is not an element of the table".format(f))

    @property
    def is_closed(self):
        return len(self.escapes) == 0

    def first_escape(self):
        """
        The lexicographically least pair whose product escapes the set.

        Returns
        -------
        witness : tuple or None
            ``(f, g, f * g)`` or `None` if the set is closed.
        """
        if self.is_closed:
            return None
        i, j = min(self.escapes)
        return self.elements[i], self.elements[j], self.escapes[(i, j)]

    def product(self, f, g):
        """
        The product ``f * g`` looked up in the table.
        """
        i, j = self.index(f), self.index(g)
        k = self.table[i, j]
        if k == ESCAPE:
            return self.escapes[(i, j)]
        return self.elements[k]

    def to_table(self):
        """
        The composition table as an Astropy table.

        Row ``f`` and column ``g`` hold ``f * g``; products that fall
        outside the set are prefixed by ``*``.
        """
        t = Table()
        labels = [f.to_string() for f in self.elements]
        t['f * g'] = labels
        for j, label in enumerate(labels):
            column = []
            for i in range(len(self.elements)):
                k = self.table[i, j]
                if k == ESCAPE:
                    column.append('*' + self.escapes[(i, j)].to_string())
                else:
                    column.append(labels[k])
            t[label] = column
        return t
