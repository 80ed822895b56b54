from __future__ import print_function, division

import numpy as np
from astropy.logger import log

from ..transformation import Transformation, is_bijective, kernel_partition
from ..quotient import Partition
from .cayley import CayleyTable

__all__ = ['NGCertificate', 'verify_group', 'FAILURE_REASONS']

FAILURE_REASONS = ('empty set', 'degree mismatch', 'not closed',
                   'no identity', 'missing inverse')


class NGCertificate(object):
    """
    The verdict of :func:`verify_group` on a finite set of transformations.

    When the set is a group, ``identity``, ``inverse_of`` and
    ``common_kernel`` are set; otherwise ``failure_reason`` is one of
    ``FAILURE_REASONS`` and ``witness`` holds the transformations that
    demonstrate the failure:

    * ``not closed``: ``(f, g, f * g)`` for the least offending pair;
    * ``missing inverse``: ``(f,)``;
    * ``degree mismatch``: two elements of different degrees;
    * ``empty set`` and ``no identity``: ``()``.

    Parameters
    ----------
    elements : iterable of :class:`~nggroups.transformation.Transformation`
    identity : :class:`~nggroups.transformation.Transformation`, optional
    inverse_of : dict, optional
        Maps each element to its inverse.
    common_kernel : :class:`~nggroups.quotient.Partition`, optional
    failure_reason : str, optional
    witness : tuple, optional
    """

    def __init__(self, elements, identity=None, inverse_of=None,
                 common_kernel=None, failure_reason=None, witness=()):

        self.elements = tuple(sorted(set(elements)))

        if failure_reason is not None and failure_reason not in FAILURE_REASONS:
            raise ValueError("failure_reason should be one of {0}".format(', '.join(FAILURE_REASONS)))

        if failure_reason is None and identity is None:
            raise ValueError("identity should be set for a group")

        self.identity = identity
        self.inverse_of = inverse_of
        self.common_kernel = common_kernel
        self.failure_reason = failure_reason
        self.witness = tuple(witness)
        self._cayley = None

    @classmethod
    def failure(cls, elements, reason, witness=()):
        return cls(elements, failure_reason=reason, witness=witness)

    @property
    def is_group(self):
        return self.failure_reason is None

    @property
    def order(self):
        return len(self.elements)

    @property
    def degree(self):
        if self.is_group:
            return self.identity.n
        return None

    @property
    def is_symmetric_subset(self):
        """
        Whether every element is a bijection
        """
        return len(self.elements) > 0 and all(is_bijective(f) for f in self.elements)

    @property
    def cayley(self):
        """
        The :class:`~nggroups.group.CayleyTable` of the elements
        """
        if self._cayley is None:
            self._cayley = CayleyTable(self.elements)
        return self._cayley

    def inverse(self, f):
        if not self.is_group:
            raise ValueError("set is not a group")
        try:
            return self.inverse_of[f]
        except KeyError:
            raise ValueError("{0} is not an element of the group".format(f))

    def __contains__(self, f):
        return f in self.elements

    def __eq__(self, other):
        if not isinstance(other, NGCertificate):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __str__(self):

        string = "is_group         : %s\n" % ('yes' if self.is_group else 'no')
        string += "order            : %i\n" % self.order
        string += "elements         : %s\n" % ' '.join(f.to_string() for f in self.elements)

        if self.is_group:
            string += "identity         : %s\n" % self.identity
            string += "common kernel    : %s\n" % self.common_kernel
            string += "symmetric subset : %s\n" % ('yes' if self.is_symmetric_subset else 'no')
            for f in self.elements:
                string += "inverse          : %s -> %s\n" % (f, self.inverse_of[f])
        else:
            string += "failure          : %s\n" % self.failure_reason
            if self.failure_reason == 'not closed':
                f, g, h = self.witness
                string += "witness          : %s%s = %s\n" % (f, g, h)
            elif len(self.witness) > 0:
                string += "witness          : %s\n" % ' '.join(f.to_string() for f in self.witness)

        return string

    def to_dict(self):
        d = {
            'is_group': self.is_group,
            'order': self.order,
            'elements': [f.to_list() for f in self.elements],
            'symmetric_subset': self.is_symmetric_subset,
        }
        if self.is_group:
            d['identity'] = self.identity.to_list()
            d['inverses'] = [self.inverse_of[f].to_list() for f in self.elements]
            d['common_kernel'] = self.common_kernel.to_list()
            d['failure'] = None
        else:
            d['identity'] = None
            d['inverses'] = None
            d['common_kernel'] = None
            d['failure'] = {'reason': self.failure_reason,
                            'witness': [f.to_list() for f in self.witness]}
        return d

    @classmethod
    def from_dict(cls, d):
        elements = [Transformation.from_list(v) for v in d['elements']]
        if d['failure'] is not None:
            return cls.failure(elements, d['failure']['reason'],
                               [Transformation.from_list(v) for v in d['failure']['witness']])
        inverses = [Transformation.from_list(v) for v in d['inverses']]
        return cls(elements,
                   identity=Transformation.from_list(d['identity']),
                   inverse_of=dict(zip(sorted(elements), inverses)),
                   common_kernel=Partition.from_list(d['common_kernel']))


def verify_group(elements):
    """
    Decide whether a finite set of transformations is a group under
    composition.

    Associativity holds for any set of maps and is not checked. The set is a
    group when it is closed, has a two-sided identity and every element has
    a two-sided inverse in the set. The identity is searched for rather than
    assumed to be an idempotent.

    Parameters
    ----------
    elements : iterable of :class:`~nggroups.transformation.Transformation`

    Returns
    -------
    certificate : :class:`NGCertificate`
    """

    elements = sorted(set(elements))

    if len(elements) == 0:
        return NGCertificate.failure(elements, 'empty set')

    other = [f for f in elements if f.n != elements[0].n]
    if len(other) > 0:
        return NGCertificate.failure(elements, 'degree mismatch', (elements[0], other[0]))

    cayley = CayleyTable(elements)
    elements = cayley.elements

    if not cayley.is_closed:
        certificate = NGCertificate.failure(elements, 'not closed', cayley.first_escape())
        certificate._cayley = cayley
        return certificate

    m = len(elements)
    indices = np.arange(m)
    table = cayley.table

    identities = [i for i in range(m)
                  if np.all(table[i, :] == indices) and np.all(table[:, i] == indices)]

    if len(identities) == 0:
        certificate = NGCertificate.failure(elements, 'no identity')
        certificate._cayley = cayley
        return certificate

    e = identities[0]

    inverse_of = {}
    for i in range(m):
        candidates = np.nonzero((table[i, :] == e) & (table[:, i] == e))[0]
        if len(candidates) == 0:
            certificate = NGCertificate.failure(elements, 'missing inverse', (elements[i],))
            certificate._cayley = cayley
            return certificate
        inverse_of[elements[i]] = elements[candidates[0]]

    identity = elements[e]
    common_kernel = kernel_partition(identity)

    for f in elements:
        if kernel_partition(f) != common_kernel:
            raise RuntimeError("kernel of {0} differs from the kernel {1} of the identity {2}".format(f, common_kernel, identity))

    log.debug("Certified group of order {0} with identity {1}".format(m, identity))

    certificate = NGCertificate(elements, identity=identity, inverse_of=inverse_of,
                                common_kernel=common_kernel)
    certificate._cayley = cayley
    return certificate
