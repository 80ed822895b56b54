from __future__ import print_function, division

from .certificate import NGCertificate, verify_group

__all__ = ['ProbeReport', 'probe_union_intersection']


class ProbeReport(object):
    """
    Group verification of the union and the intersection of two groups.

    ``intersection`` is a negative certificate with reason ``empty set`` when
    the two groups have no element in common.
    """

    def __init__(self, union, intersection):
        self.union = union
        self.intersection = intersection

    @property
    def intersection_empty(self):
        return self.intersection.order == 0

    def __str__(self):
        string = "Union\n-----\n"
        string += str(self.union)
        string += "\nIntersection\n------------\n"
        if self.intersection_empty:
            string += "empty - not a group\n"
        else:
            string += str(self.intersection)
        return string

    def to_dict(self):
        return {
            'union': self.union.to_dict(),
            'intersection': None if self.intersection_empty else self.intersection.to_dict(),
            'intersection_empty': self.intersection_empty,
        }

    @classmethod
    def from_dict(cls, d):
        union = NGCertificate.from_dict(d['union'])
        if d['intersection'] is None:
            intersection = NGCertificate.failure([], 'empty set')
        else:
            intersection = NGCertificate.from_dict(d['intersection'])
        return cls(union, intersection)


def probe_union_intersection(first, second):
    """
    Check whether the union and the intersection of two groups of
    transformations are again groups.

    Parameters
    ----------
    first, second : iterable of :class:`~nggroups.transformation.Transformation`
        Two sets that each verify as a group, of the same degree.

    Returns
    -------
    report : :class:`ProbeReport`
    """

    first, second = frozenset(first), frozenset(second)

    for name, elements in (('first', first), ('second', second)):
        certificate = verify_group(elements)
        if not certificate.is_group:
            raise ValueError("{0} set is not a group ({1})".format(name, certificate.failure_reason))

    if next(iter(first)).n != next(iter(second)).n:
        raise ValueError("degree mismatch: {0} and {1}".format(next(iter(first)).n, next(iter(second)).n))

    union = verify_group(first | second)

    common = first & second
    if len(common) == 0:
        intersection = NGCertificate.failure([], 'empty set')
    else:
        intersection = verify_group(common)

    return ProbeReport(union, intersection)
