from __future__ import print_function, division

import itertools

from astropy.logger import log

from ..transformation import Transformation, compose
from ..quotient import InducedMap, Partition, induced_map

__all__ = ['QuotientRepresentation', 'quotient_representation', 'permutation_order']


def permutation_order(perm):
    """
    The order of a bijective :class:`~nggroups.quotient.InducedMap`.
    """
    if not perm.is_bijective():
        raise ValueError("induced map should be a bijection")
    power, k = perm, 1
    while not power.is_identity():
        power = perm.compose(power)
        k += 1
    return k


class QuotientRepresentation(object):
    """
    The permutation group of induced maps of a group of transformations on
    the blocks of its common kernel, together with the correspondence
    ``rho`` from elements to induced maps.
    """

    def __init__(self, quotient, elements, perms):
        self.quotient = quotient
        self.elements = tuple(elements)
        self.perms = tuple(perms)
        if len(self.perms) != len(self.elements):
            raise ValueError("perms has incorrect length (expected {0} but found {1})".format(len(self.elements), len(self.perms)))
        self.rho = dict(zip(self.elements, self.perms))
        self._check()

    def _check(self):

        self.all_bijective = all(p.is_bijective() for p in self.perms)

        # rho(fg) = rho(f) rho(g) for every pair
        self.is_homomorphism = self.all_bijective
        if self.all_bijective:
            for f, g in itertools.product(self.elements, repeat=2):
                fg = compose(f, g)
                if fg not in self.rho or self.rho[fg] != self.rho[f].compose(self.rho[g]):
                    self.is_homomorphism = False
                    break

        self.is_injective = len(set(self.perms)) == len(self.perms)

        perm_set = set(self.perms)
        self.is_closed = self.all_bijective and all(
            p.compose(q) in perm_set for p, q in itertools.product(self.perms, repeat=2))

        self.is_isomorphism = self.all_bijective and self.is_homomorphism and self.is_injective

    def __len__(self):
        return len(self.perms)

    def is_cyclic(self):
        """
        Whether some induced permutation generates the whole group.
        """
        if not self.all_bijective:
            return False
        return any(permutation_order(p) == len(self.perms) for p in self.perms)

    def __str__(self):
        string = "quotient       : %s\n" % self.quotient
        string += "is_isomorphism : %s\n" % ('yes' if self.is_isomorphism else 'no')
        for f, p in zip(self.elements, self.perms):
            string += "%s : %s\n" % (f, p)
        return string

    def to_dict(self):
        return {
            'quotient': self.quotient.to_list(),
            'elements': [f.to_list() for f in self.elements],
            'perms': [p.to_list() for p in self.perms],
            'is_isomorphism': self.is_isomorphism,
        }

    @classmethod
    def from_dict(cls, d):
        quotient = Partition.from_list(d['quotient'])
        elements = [Transformation.from_list(v) for v in d['elements']]
        perms = [InducedMap.from_list(quotient, v) for v in d['perms']]
        return cls(quotient, elements, perms)

    def __eq__(self, other):
        if not isinstance(other, QuotientRepresentation):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result


def quotient_representation(certificate, elements):
    """
    Build the permutation representation of a certified group on the
    quotient by its common kernel.

    Parameters
    ----------
    certificate : :class:`~nggroups.group.NGCertificate`
        A certificate with ``is_group`` set.
    elements : iterable of :class:`~nggroups.transformation.Transformation`
        The elements of the certified group.

    Returns
    -------
    representation : :class:`QuotientRepresentation`
    """

    if not certificate.is_group:
        raise ValueError("certificate is not that of a group ({0})".format(certificate.failure_reason))

    elements = tuple(sorted(set(elements)))
    if elements != certificate.elements:
        raise ValueError("elements do not match the certified group")

    quotient = certificate.common_kernel
    perms = [induced_map(f, quotient) for f in elements]

    representation = QuotientRepresentation(quotient, elements, perms)

    log.debug("Representation on {0} blocks: isomorphism={1}".format(len(quotient), representation.is_isomorphism))

    return representation
