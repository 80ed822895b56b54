import itertools

import pytest
import numpy as np

from .. import (enumerate_transformations, enumerate_idempotents, idempotent_count,
                maximal_group_at, subgroups_at, enumerate_groups_fast,
                enumerate_groups_brute_force, enumerate_groups_of_order,
                EnumerationReport)
from ...transformation import Transformation, is_idempotent, kernel_partition, image
from ...group import verify_group


def T(*images):
    return Transformation(images)


GROUPS_OF_ORDER_TWO = [
    [(1, 1, 3), (3, 3, 1)],
    [(1, 2, 1), (2, 1, 2)],
    [(1, 2, 2), (2, 1, 1)],
    [(1, 2, 3), (1, 3, 2)],
    [(1, 2, 3), (2, 1, 3)],
    [(1, 2, 3), (3, 2, 1)],
    [(1, 3, 3), (3, 1, 1)],
    [(2, 2, 3), (3, 3, 2)],
    [(2, 3, 2), (3, 2, 3)],
]


def test_enumerate_transformations():
    maps = list(enumerate_transformations(2))
    assert maps == [T(1, 1), T(1, 2), T(2, 1), T(2, 2)]
    assert len(list(enumerate_transformations(3))) == 27
    assert maps == sorted(maps)


def test_enumerate_transformations_cap():
    with pytest.raises(ValueError) as exc:
        list(enumerate_transformations(6))
    assert exc.value.args[0] == 'n=6 is above the enumeration cap of 5'


@pytest.mark.parametrize(('n', 'count'), [(1, 1), (2, 3), (3, 10), (4, 41), (5, 196)])
def test_idempotent_counts(n, count):
    idempotents = enumerate_idempotents(n)
    assert len(idempotents) == count
    assert idempotent_count(n) == count
    assert all(is_idempotent(e) for e in idempotents)


def test_idempotents_agree_with_scan():
    expected = [f for f in enumerate_transformations(4) if is_idempotent(f)]
    assert enumerate_idempotents(4) == expected


def test_maximal_group():
    assert maximal_group_at(T(1, 1, 3)) == frozenset([T(1, 1, 3), T(3, 3, 1)])
    assert len(maximal_group_at(T(1, 2, 3, 4))) == 24
    assert maximal_group_at(T(2, 2, 2)) == frozenset([T(2, 2, 2)])


def test_maximal_group_shares_kernel_and_image():
    for e in enumerate_idempotents(4):
        group = maximal_group_at(e)
        certificate = verify_group(group)
        assert certificate.identity == e
        for f in group:
            assert kernel_partition(f) == kernel_partition(e)
            assert image(f) == image(e)


def test_maximal_group_not_idempotent():
    with pytest.raises(ValueError) as exc:
        maximal_group_at(T(1, 1, 2))
    assert exc.value.args[0] == '(1,1,2) should be idempotent'


def test_subgroups_of_symmetric_group():
    subgroups = subgroups_at(T(1, 2, 3))
    assert [len(s) for s in subgroups] == [1, 2, 2, 2, 3, 6]
    assert len(subgroups_at(T(1, 2, 3, 4))) == 30
    for subgroup in subgroups:
        assert verify_group(subgroup).is_group


def test_groups_of_order_two():
    groups = enumerate_groups_fast(3, 2)
    expected = sorted((frozenset(Transformation(f) for f in g) for g in GROUPS_OF_ORDER_TWO),
                      key=sorted)
    assert groups == expected


@pytest.mark.parametrize(('n', 'k', 'count'), [(1, 1, 1), (2, 1, 3), (2, 2, 1),
                                               (3, 1, 10), (3, 2, 9), (3, 3, 1),
                                               (3, 4, 0), (3, 6, 1), (4, 2, 69),
                                               (4, 3, 16), (4, 24, 1)])
def test_group_counts(n, k, count):
    assert len(enumerate_groups_fast(n, k)) == count


@pytest.mark.parametrize(('n', 'k'), [(1, 1), (2, 1), (2, 2), (2, 3), (2, 4),
                                   (3, 1), (3, 2), (3, 3), (3, 4), (3, 5), (3, 6)])
def test_paths_agree(n, k):
    assert enumerate_groups_fast(n, k) == enumerate_groups_brute_force(n, k)


def test_order_one_groups_are_idempotents():
    groups = enumerate_groups_brute_force(3, 1)
    assert groups == [frozenset([e]) for e in enumerate_idempotents(3)]


def test_brute_force_limits():
    with pytest.raises(ValueError) as exc:
        enumerate_groups_brute_force(4, 1)
    assert exc.value.args[0] == 'n=4 is above the enumeration cap of 3'
    with pytest.raises(ValueError) as exc:
        enumerate_groups_brute_force(3, 7)
    assert exc.value.args[0] == '888030 subsets of size 7 is above the brute-force limit of 300000'


def test_enumerate_groups_of_order():
    report = enumerate_groups_of_order(3, 2)
    assert report.count == 9
    assert report.symmetric_count == 3
    assert report.cross_checked
    assert report.skipped is None
    assert 'cross-checked   : yes\n' in str(report)
    assert report.counts == {(2, False): 6, (2, True): 3}
    assert len(report.idempotents) == 10
    symmetric = [list(c.elements) for c in report.groups if c.is_symmetric_subset]
    assert symmetric == [[T(1, 2, 3), T(1, 3, 2)],
                         [T(1, 2, 3), T(2, 1, 3)],
                         [T(1, 2, 3), T(3, 2, 1)]]


def test_enumerate_groups_of_order_without_cross_check():
    report = enumerate_groups_of_order(4, 3)
    assert report.count == 16
    assert not report.cross_checked
    assert report.skipped == 'n=4 is above the brute-force cap of 3'
    report = enumerate_groups_of_order(3, 3, cross_check=False)
    assert not report.cross_checked
    assert report.skipped == 'disabled'
    assert 'cross-checked   : no (disabled)\n' in str(report)


def test_cross_check_above_limit():
    report = enumerate_groups_of_order(3, 7)
    assert not report.cross_checked
    assert report.skipped == '888030 subsets is above the brute-force limit of 300000'
    assert ('cross-checked   : no (888030 subsets is above the brute-force limit of 300000)\n'
            in str(report))
    assert report.to_dict()['skipped'] == report.skipped


def test_enumerate_groups_of_order_cap():
    with pytest.raises(ValueError) as exc:
        enumerate_groups_of_order(5, 2)
    assert exc.value.args[0] == 'n=5 is above the enumeration cap of 4'
    with pytest.raises(ValueError) as exc:
        enumerate_groups_of_order(3, 0)
    assert exc.value.args[0] == 'k should be strictly positive'


def test_every_group_certified():
    for k in (1, 2, 3, 6):
        for certificate in enumerate_groups_of_order(3, k, cross_check=False).groups:
            assert certificate.is_group
            assert certificate.order == k
            assert is_idempotent(certificate.identity)
            assert certificate.identity.n == 3
            assert frozenset(certificate.elements) <= maximal_group_at(certificate.identity)


def test_report_table():
    t = enumerate_groups_of_order(3, 2, cross_check=False).to_table()
    assert t.colnames == ['group', 'identity', 'symmetric', 'elements']
    assert t['group'][0] == 'G1'
    assert t['elements'][0] == '(1,1,3) (3,3,1)'
    assert np.sum(t['symmetric'] == 'yes') == 3


def test_report_roundtrip():
    report = enumerate_groups_of_order(3, 2)
    assert EnumerationReport.from_dict(report.to_dict()) == report
    d = report.to_dict()
    assert d['count'] == 9
    assert d['groups'][0]['elements'] == [[1, 1, 3], [3, 3, 1]]
