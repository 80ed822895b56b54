from __future__ import print_function, division

from ..transformation import Transformation, compose

__all__ = ['PAPER_LITERAL', 'STANDARD', 'CONVENTIONS', 'RegularityConvention',
           'RegularityReport', 'regular_witnesses', 'paired_inverse_witnesses',
           'regularity_report', 'regular_implies_paired', 'is_paired_symmetric']

PAPER_LITERAL = 'paper-literal'
STANDARD = 'standard'
CONVENTIONS = (PAPER_LITERAL, STANDARD)


class RegularityConvention(object):
    """
    The reading of the regularity equation.

    Under ``paper-literal`` an element f is regular when fyf = y for some y,
    and y is a paired witness when in addition yfy = f. Under ``standard``
    f is regular when fyf = f for some y, and y is a paired witness when in
    addition yfy = y.

    Parameters
    ----------
    tag : str
        ``'paper-literal'`` or ``'standard'``.
    """

    def __init__(self, tag):
        if isinstance(tag, RegularityConvention):
            tag = tag.tag
        if tag not in CONVENTIONS:
            raise ValueError("convention should be one of {0}".format(', '.join(CONVENTIONS)))
        self.tag = tag

    def is_witness(self, f, y):
        fyf = compose(f, compose(y, f))
        if self.tag == PAPER_LITERAL:
            return fyf == y
        else:
            return fyf == f

    def is_paired_witness(self, f, y):
        yfy = compose(y, compose(f, y))
        if self.tag == PAPER_LITERAL:
            return self.is_witness(f, y) and yfy == f
        else:
            return self.is_witness(f, y) and yfy == y

    def __eq__(self, other):
        if not isinstance(other, RegularityConvention):
            return NotImplemented
        return self.tag == other.tag

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return "RegularityConvention('{0}')".format(self.tag)

    def __str__(self):
        return self.tag


def _check_member(f, certificate):
    if not certificate.is_group:
        raise ValueError("certificate is not that of a group ({0})".format(certificate.failure_reason))
    if f not in certificate.elements:
        raise ValueError("{0} is not an element of the group".format(f))


def regular_witnesses(f, certificate, convention):
    """
    All y in the group with fyf = y (``paper-literal``) or fyf = f
    (``standard``), in canonical order.

    Parameters
    ----------
    f : :class:`~nggroups.transformation.Transformation`
        An element of the group.
    certificate : :class:`~nggroups.group.NGCertificate`
        The certificate of the group.
    convention : str or :class:`RegularityConvention`
    """
    convention = RegularityConvention(convention)
    _check_member(f, certificate)
    return [y for y in certificate.elements if convention.is_witness(f, y)]


def paired_inverse_witnesses(f, certificate, convention):
    """
    All y in the group satisfying both equations of the convention's pair:
    fyf = y and yfy = f (``paper-literal``), or fyf = f and yfy = y
    (``standard``).
    """
    convention = RegularityConvention(convention)
    _check_member(f, certificate)
    return [y for y in certificate.elements if convention.is_paired_witness(f, y)]


class RegularityReport(object):
    """
    Witness lists for every element of a group under one convention.

    The group is regular when every element has a witness, and an inverse
    group when every element has exactly one paired witness.
    """

    def __init__(self, convention, elements, witnesses, paired_witnesses):
        self.convention = RegularityConvention(convention)
        self.elements = tuple(elements)
        self.witnesses = dict((f, list(witnesses[f])) for f in self.elements)
        self.paired_witnesses = dict((f, list(paired_witnesses[f])) for f in self.elements)

    @property
    def is_regular(self):
        return all(len(self.witnesses[f]) > 0 for f in self.elements)

    @property
    def is_inverse_ng(self):
        return all(len(self.paired_witnesses[f]) == 1 for f in self.elements)

    def __str__(self):
        string = "convention    : %s\n" % self.convention
        string += "is_regular    : %s\n" % ('yes' if self.is_regular else 'no')
        string += "is_inverse_ng : %s\n" % ('yes' if self.is_inverse_ng else 'no')
        for f in self.elements:
            string += "%s : witnesses [%s] paired [%s]\n" % (
                f, ' '.join(str(y) for y in self.witnesses[f]),
                ' '.join(str(y) for y in self.paired_witnesses[f]))
        return string

    def to_dict(self):
        return {
            'convention': self.convention.tag,
            'is_regular': self.is_regular,
            'is_inverse_ng': self.is_inverse_ng,
            'elements': [{'f': f.to_list(),
                          'witnesses': [y.to_list() for y in self.witnesses[f]],
                          'paired_witnesses': [y.to_list() for y in self.paired_witnesses[f]]}
                         for f in self.elements],
        }

    @classmethod
    def from_dict(cls, d):
        elements, witnesses, paired = [], {}, {}
        for entry in d['elements']:
            f = Transformation.from_list(entry['f'])
            elements.append(f)
            witnesses[f] = [Transformation.from_list(v) for v in entry['witnesses']]
            paired[f] = [Transformation.from_list(v) for v in entry['paired_witnesses']]
        return cls(d['convention'], elements, witnesses, paired)

    def __eq__(self, other):
        if not isinstance(other, RegularityReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result


def regularity_report(certificate, convention):
    """
    Collect regular and paired witnesses for every element of a certified
    group.

    Parameters
    ----------
    certificate : :class:`~nggroups.group.NGCertificate`
    convention : str or :class:`RegularityConvention`

    Returns
    -------
    report : :class:`RegularityReport`
    """
    convention = RegularityConvention(convention)
    if not certificate.is_group:
        raise ValueError("certificate is not that of a group ({0})".format(certificate.failure_reason))
    witnesses = dict((f, regular_witnesses(f, certificate, convention))
                     for f in certificate.elements)
    paired = dict((f, paired_inverse_witnesses(f, certificate, convention))
                  for f in certificate.elements)
    return RegularityReport(convention, certificate.elements, witnesses, paired)


def regular_implies_paired(certificate, convention):
    """
    Whether every regular element of the group also has a paired witness.

    This is tested, not assumed: under ``paper-literal`` it can fail.
    """
    report = regularity_report(certificate, convention)
    return all(len(report.paired_witnesses[f]) > 0
               for f in report.elements if len(report.witnesses[f]) > 0)


def is_paired_symmetric(certificate, convention):
    """
    Whether y is a paired witness for f exactly when f is one for y.
    """
    report = regularity_report(certificate, convention)
    for f in report.elements:
        for y in report.elements:
            if (y in report.paired_witnesses[f]) != (f in report.paired_witnesses[y]):
                return False
    return True
