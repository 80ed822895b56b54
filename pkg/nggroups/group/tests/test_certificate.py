import itertools

import pytest
import numpy as np

from .. import CayleyTable, ESCAPE, NGCertificate, verify_group
from ...transformation import Transformation, is_idempotent, kernel_partition
from ...quotient import Partition


def T(*images):
    return Transformation(images)


G1 = [T(1, 1, 3), T(3, 3, 1)]
G2 = [T(1, 2, 1), T(2, 1, 2)]
C3 = [T(1, 2, 3), T(2, 3, 1), T(3, 1, 2)]


def test_cayley_table():
    table = CayleyTable(G1)
    assert table.elements == (T(1, 1, 3), T(3, 3, 1))
    np.testing.assert_array_equal(table.table, [[0, 1], [1, 0]])
    assert table.is_closed
    assert table.first_escape() is None
    assert table.product(T(3, 3, 1), T(3, 3, 1)) == T(1, 1, 3)


def test_cayley_table_escape():
    table = CayleyTable(G1 + G2)
    assert not table.is_closed
    assert table.table[0, 1] == ESCAPE
    assert table.first_escape() == (T(1, 1, 3), T(1, 2, 1), T(1, 1, 1))
    assert table.product(T(1, 1, 3), T(1, 2, 1)) == T(1, 1, 1)


def test_cayley_table_invalid():
    with pytest.raises(ValueError) as exc:
        CayleyTable([])
    assert exc.value.args[0] == 'elements should not be empty'
    with pytest.raises(ValueError) as exc:
        CayleyTable([T(1, 2), T(1, 1, 1)])
    assert exc.value.args[0] == 'degree mismatch: elements should all have the same degree'


def test_cayley_to_table():
    t = CayleyTable(G1 + G2).to_table()
    assert t.colnames == ['f * g', '(1,1,3)', '(1,2,1)', '(2,1,2)', '(3,3,1)']
    assert t['(1,2,1)'][0] == '*(1,1,1)'
    assert t['(3,3,1)'][3] == '(1,1,3)'


def test_verify_g1():
    c = verify_group(G1)
    assert c.is_group
    assert c.identity == T(1, 1, 3)
    assert c.order == 2
    assert c.common_kernel == Partition([[1, 2], [3]])
    assert not c.is_symmetric_subset
    assert c.inverse(T(3, 3, 1)) == T(3, 3, 1)
    assert c.degree == 3


def test_verify_cyclic():
    c = verify_group(C3)
    assert c.is_group
    assert c.identity == T(1, 2, 3)
    assert c.is_symmetric_subset
    assert c.inverse(T(2, 3, 1)) == T(3, 1, 2)


def test_verify_not_closed():
    c = verify_group(G1 + G2)
    assert not c.is_group
    assert c.failure_reason == 'not closed'
    assert c.witness == (T(1, 1, 3), T(1, 2, 1), T(1, 1, 1))
    assert c.order == 4


def test_verify_no_identity():
    # constant maps are closed but have no two-sided identity
    c = verify_group([T(1, 1), T(2, 2)])
    assert c.failure_reason == 'no identity'


def test_verify_missing_inverse():
    c = verify_group([T(1, 2, 3), T(1, 1, 3)])
    assert c.failure_reason == 'missing inverse'
    assert c.witness == (T(1, 1, 3),)


def test_verify_empty():
    c = verify_group([])
    assert c.failure_reason == 'empty set'
    assert c.order == 0


def test_verify_degree_mismatch():
    c = verify_group([T(1, 1, 3), T(1, 2)])
    assert c.failure_reason == 'degree mismatch'
    assert c.witness == (T(1, 2), T(1, 1, 3))


def test_idempotent_singletons():
    for images in itertools.product(range(1, 4), repeat=3):
        f = Transformation(images)
        assert verify_group([f]).is_group == is_idempotent(f)


def test_group_invariants():
    c = verify_group(C3)
    for f in c.elements:
        g = c.inverse(f)
        assert c.inverse(g) == f
        assert f * g == c.identity == g * f
        assert kernel_partition(f) == c.common_kernel
    assert is_idempotent(c.identity)


def test_inverse_not_in_group():
    c = verify_group(G1)
    with pytest.raises(ValueError) as exc:
        c.inverse(T(1, 2, 3))
    assert exc.value.args[0] == '(1,2,3) is not an element of the group'


def test_dict_schema():
    d = verify_group(G1).to_dict()
    assert d == {'is_group': True, 'order': 2,
                 'identity': [1, 1, 3],
                 'elements': [[1, 1, 3], [3, 3, 1]],
                 'inverses': [[1, 1, 3], [3, 3, 1]],
                 'common_kernel': [[1, 2], [3]],
                 'symmetric_subset': False,
                 'failure': None}


@pytest.mark.parametrize('elements', [G1, C3, G1 + G2, [], [T(1, 2, 3), T(1, 1, 3)]])
def test_dict_roundtrip(elements):
    c = verify_group(elements)
    assert NGCertificate.from_dict(c.to_dict()) == c


def test_failure_reason_invalid():
    with pytest.raises(ValueError):
        NGCertificate([T(1, 2)], failure_reason='unknown')


def test_str():
    string = str(verify_group(G1 + G2))
    assert 'failure          : not closed' in string
    assert 'witness          : (1,1,3)(1,2,1) = (1,1,1)' in string
