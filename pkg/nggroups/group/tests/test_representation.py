import itertools

import pytest

from .. import (verify_group, quotient_representation, QuotientRepresentation,
                permutation_order)
from ...transformation import Transformation
from ...quotient import Partition


def T(*images):
    return Transformation(images)


G1 = [T(1, 1, 3), T(3, 3, 1)]
G2 = [T(1, 2, 1), T(2, 1, 2)]
S3 = [Transformation(p) for p in itertools.permutations((1, 2, 3))]


def test_g1():
    c = verify_group(G1)
    rep = quotient_representation(c, G1)
    assert rep.quotient == Partition([[1, 2], [3]])
    assert rep.rho[T(1, 1, 3)].is_identity()
    assert rep.rho[T(3, 3, 1)].mapping == (1, 0)
    assert rep.is_isomorphism
    assert rep.is_closed
    assert rep.is_cyclic()


def test_g2():
    c = verify_group(G2)
    rep = quotient_representation(c, G2)
    assert rep.quotient == Partition([[1, 3], [2]])
    assert rep.rho[T(2, 1, 2)].mapping == (1, 0)
    assert rep.is_isomorphism


def test_symmetric_group():
    c = verify_group(S3)
    rep = quotient_representation(c, S3)
    assert rep.quotient == Partition.discrete(3)
    assert sorted(p.mapping for p in rep.perms) == sorted(itertools.permutations(range(3)))
    assert rep.is_isomorphism
    assert not rep.is_cyclic()


def test_not_a_group():
    c = verify_group(G1 + G2)
    with pytest.raises(ValueError) as exc:
        quotient_representation(c, G1 + G2)
    assert exc.value.args[0] == 'certificate is not that of a group (not closed)'


def test_elements_mismatch():
    with pytest.raises(ValueError) as exc:
        quotient_representation(verify_group(G1), G2)
    assert exc.value.args[0] == 'elements do not match the certified group'


def test_permutation_order():
    rep = quotient_representation(verify_group(S3), S3)
    orders = sorted(permutation_order(p) for p in rep.perms)
    assert orders == [1, 2, 2, 2, 3, 3]


def test_roundtrip():
    rep = quotient_representation(verify_group(G1), G1)
    assert QuotientRepresentation.from_dict(rep.to_dict()) == rep
    assert rep.to_dict()['perms'] == [[1, 2], [2, 1]]
