from __future__ import print_function, division

import numpy as np
from sympy import isprime

from ..transformation import Transformation
from ..group import (NGCertificate, QuotientRepresentation, verify_group,
                     quotient_representation)
from ..utils.validator import validate_integer

__all__ = ['PlaneEncoding', 'projection_map', 'projection_group',
           'ProjectionReport', 'projection_report']


def validate_prime(name, value):
    value = validate_integer(name, value)
    if not isprime(value):
        raise ValueError("{0} should be prime".format(name))
    return value


class PlaneEncoding(object):
    """
    Numbering of the points of the plane F_p^2.

    The point with coordinates ``(x1, x2)`` (each in [0:p-1]) is numbered
    ``p * x1 + x2 + 1``, so that the points are 1 to p^2 and the origin is 1.

    Parameters
    ----------
    p : int
        A prime.
    """

    def __init__(self, p):
        self.p = validate_prime('p', p)

    @property
    def n(self):
        return self.p ** 2

    def index(self, x1, x2):
        x1 = validate_integer('x1', x1, domain=(0, self.p - 1))
        x2 = validate_integer('x2', x2, domain=(0, self.p - 1))
        return self.p * x1 + x2 + 1

    def coordinates(self, point):
        point = validate_integer('point', point, domain=(1, self.n))
        return divmod(point - 1, self.p)

    def grid(self):
        """
        The coordinate arrays ``x1`` and ``x2`` of the points 1 to p^2
        """
        points = np.arange(self.n)
        return points // self.p, points % self.p


def projection_map(p, a):
    """
    The map T_a sending (x1, x2) to (a x1 mod p, 0), as a transformation of
    the p^2 points of the plane.

    Parameters
    ----------
    p : int
        A prime.
    a : int
        A nonzero residue, in the range [1:p-1].
    """
    encoding = PlaneEncoding(p)
    a = validate_integer('a', a)
    if a % p == 0:
        raise ValueError("a should be nonzero modulo p")
    a = validate_integer('a', a, domain=(1, p - 1))
    x1, _ = encoding.grid()
    images = encoding.p * ((a * x1) % encoding.p) + 1
    return Transformation(images)


def projection_group(p):
    """
    The group {T_a : a in F_p*} of rank-p projections of the plane F_p^2.
    """
    p = validate_prime('p', p)
    return frozenset(projection_map(p, a) for a in range(1, p))


class ProjectionReport(object):
    """
    Certificate and quotient representation of a projection group.
    """

    def __init__(self, p, certificate, representation):
        self.p = p
        self.certificate = certificate
        self.representation = representation

    def __str__(self):
        string = "p : %i\n\n" % self.p
        string += str(self.certificate)
        string += "\n"
        string += str(self.representation)
        return string

    def to_dict(self):
        return {
            'p': self.p,
            'certificate': self.certificate.to_dict(),
            'representation': self.representation.to_dict(),
            'cyclic': self.representation.is_cyclic(),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d['p'], NGCertificate.from_dict(d['certificate']),
                   QuotientRepresentation.from_dict(d['representation']))


def projection_report(p):
    elements = projection_group(p)
    certificate = verify_group(elements)
    representation = quotient_representation(certificate, elements)
    return ProjectionReport(p, certificate, representation)
