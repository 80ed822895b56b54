import pytest

from .. import (PAPER_LITERAL, STANDARD, CONVENTIONS, RegularityConvention,
                RegularityReport, regular_witnesses, paired_inverse_witnesses,
                regularity_report, regular_implies_paired, is_paired_symmetric)
from ...transformation import Transformation
from ...group import verify_group
from ...enumeration import enumerate_groups_of_order


def T(*images):
    return Transformation(images)


E, S = T(1, 1, 3), T(3, 3, 1)
G1 = verify_group([E, S])
CYCLIC = verify_group([T(1, 2, 3, 1), T(2, 3, 1, 2), T(3, 1, 2, 3)])


def small_groups():
    for n in (2, 3):
        for k in (1, 2, 3, 6):
            for certificate in enumerate_groups_of_order(n, k, cross_check=False).groups:
                yield certificate


def test_convention():
    assert RegularityConvention(STANDARD) == RegularityConvention(RegularityConvention(STANDARD))
    assert str(RegularityConvention(PAPER_LITERAL)) == 'paper-literal'
    with pytest.raises(ValueError) as exc:
        RegularityConvention('textbook')
    assert exc.value.args[0] == 'convention should be one of paper-literal, standard'


def test_literal_witnesses_in_g1():
    assert regular_witnesses(E, G1, PAPER_LITERAL) == [E, S]
    assert regular_witnesses(S, G1, PAPER_LITERAL) == [E, S]
    assert paired_inverse_witnesses(E, G1, PAPER_LITERAL) == [E, S]
    assert paired_inverse_witnesses(S, G1, PAPER_LITERAL) == [E, S]
    report = regularity_report(G1, PAPER_LITERAL)
    assert report.is_regular
    assert not report.is_inverse_ng


def test_standard_witnesses_in_g1():
    assert regular_witnesses(S, G1, STANDARD) == [S]
    assert paired_inverse_witnesses(S, G1, STANDARD) == [S]
    report = regularity_report(G1, STANDARD)
    assert report.is_regular
    assert report.is_inverse_ng


def test_conventions_diverge_on_cyclic_group():
    literal = regularity_report(CYCLIC, PAPER_LITERAL)
    standard = regularity_report(CYCLIC, STANDARD)
    assert standard.is_regular
    assert standard.is_inverse_ng
    assert not literal.is_regular
    assert literal.witnesses[T(1, 2, 3, 1)] == list(CYCLIC.elements)
    assert literal.witnesses[T(2, 3, 1, 2)] == []
    assert literal.witnesses[T(3, 1, 2, 3)] == []


def test_standard_paired_witness_is_inverse():
    for certificate in small_groups():
        report = regularity_report(certificate, STANDARD)
        assert report.is_regular
        assert report.is_inverse_ng
        for f in certificate.elements:
            assert report.witnesses[f] == [certificate.inverse(f)]
            assert report.paired_witnesses[f] == [certificate.inverse(f)]


@pytest.mark.parametrize('convention', CONVENTIONS)
def test_paired_symmetric(convention):
    for certificate in small_groups():
        assert is_paired_symmetric(certificate, convention)


def test_regular_implies_paired():
    assert regular_implies_paired(G1, PAPER_LITERAL)
    assert regular_implies_paired(CYCLIC, PAPER_LITERAL)
    assert regular_implies_paired(CYCLIC, STANDARD)


def test_not_a_member():
    with pytest.raises(ValueError) as exc:
        regular_witnesses(T(1, 2, 3), G1, STANDARD)
    assert exc.value.args[0] == '(1,2,3) is not an element of the group'


def test_not_a_group():
    certificate = verify_group([E, S, T(1, 2, 1)])
    with pytest.raises(ValueError) as exc:
        regularity_report(certificate, STANDARD)
    assert exc.value.args[0] == 'certificate is not that of a group (not closed)'


def test_dict():
    d = regularity_report(G1, STANDARD).to_dict()
    assert d == {'convention': 'standard', 'is_regular': True, 'is_inverse_ng': True,
                 'elements': [{'f': [1, 1, 3], 'witnesses': [[1, 1, 3]],
                               'paired_witnesses': [[1, 1, 3]]},
                              {'f': [3, 3, 1], 'witnesses': [[3, 3, 1]],
                               'paired_witnesses': [[3, 3, 1]]}]}


@pytest.mark.parametrize('convention', CONVENTIONS)
def test_roundtrip(convention):
    report = regularity_report(CYCLIC, convention)
    assert RegularityReport.from_dict(report.to_dict()) == report
