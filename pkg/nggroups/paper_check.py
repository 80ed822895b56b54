from __future__ import print_function, division

import functools
import itertools

from astropy.logger import log
from astropy.table import Table

from .transformation import Transformation, is_idempotent, kernel_partition
from .quotient import is_induced_identity, is_induced_bijective
from .group import (verify_group, membership_condition, containing_group_oracle,
                    quotient_representation, probe_union_intersection)
from .enumeration import (enumerate_transformations, enumerate_idempotents, idempotent_count,
                          enumerate_groups_of_order, enumerate_groups_fast,
                          enumerate_groups_brute_force, maximal_group_at)
from .regularity import (PAPER_LITERAL, STANDARD, CONVENTIONS, regular_witnesses,
                         paired_inverse_witnesses, regularity_report,
                         regular_implies_paired, is_paired_symmetric)
from .fieldgen import projection_report
from .utils.io import dumps_json

__all__ = ['CheckResult', 'PaperCheckReport', 'run_paper_check', 'GROUPS_OF_ORDER_TWO']


def _group(*images):
    return frozenset(Transformation(f) for f in images)


GROUPS_OF_ORDER_TWO = {
    'G1': _group((1, 1, 3), (3, 3, 1)),
    'G2': _group((1, 2, 1), (2, 1, 2)),
    'G3': _group((1, 2, 2), (2, 1, 1)),
    'G4': _group((1, 2, 3), (1, 3, 2)),
    'G5': _group((1, 2, 3), (2, 1, 3)),
    'G6': _group((1, 2, 3), (3, 2, 1)),
    'G7': _group((1, 3, 3), (3, 1, 1)),
    'G8': _group((2, 2, 3), (3, 3, 2)),
    'G9': _group((2, 3, 2), (3, 2, 3)),
}

SYMMETRIC_GROUPS_OF_ORDER_TWO = ('G4', 'G5', 'G6')

# cyclic subgroup of order 3 of the maximal group at (1,2,3,1)
CYCLIC_ORDER_THREE = _group((1, 2, 3, 1), (2, 3, 1, 2), (3, 1, 2, 3))


class CheckResult(object):
    """
    The outcome of one reproduction check.

    ``passed`` is `None` for observations that are reported without being
    asserted.
    """

    def __init__(self, name, description, passed, detail=''):
        self.name = name
        self.description = description
        self.passed = passed
        self.detail = detail

    @property
    def status(self):
        if self.passed is None:
            return 'INFO'
        return 'PASS' if self.passed else 'FAIL'

    def to_dict(self):
        return {'name': self.name, 'description': self.description,
                'passed': self.passed, 'detail': self.detail}

    @classmethod
    def from_dict(cls, d):
        return cls(d['name'], d['description'], d['passed'], d['detail'])


class PaperCheckReport(object):

    def __init__(self, results):
        self.results = list(results)

    @property
    def passed(self):
        return all(r.passed is not False for r in self.results)

    def to_table(self):
        t = Table()
        t['check'] = [r.name for r in self.results]
        t['result'] = [r.status for r in self.results]
        t['description'] = [r.description for r in self.results]
        t['detail'] = [r.detail for r in self.results]
        return t

    def __str__(self):
        string = "\n".join(self.to_table().pformat(max_lines=-1, max_width=-1))
        string += "\n\n%i checks, %i failed\n" % (
            sum(1 for r in self.results if r.passed is not None),
            sum(1 for r in self.results if r.passed is False))
        return string

    def to_dict(self):
        return {'passed': self.passed,
                'checks': [r.to_dict() for r in self.results]}

    @classmethod
    def from_dict(cls, d):
        return cls([CheckResult.from_dict(r) for r in d['checks']])

    def __eq__(self, other):
        if not isinstance(other, PaperCheckReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other


@functools.lru_cache(maxsize=None)
def _small_groups():
    # all certified groups for n <= 4 and order <= 6
    certificates = []
    for n, k in itertools.product(range(1, 5), range(1, 7)):
        certificates.extend(enumerate_groups_of_order(n, k, cross_check=False).groups)
    return tuple(certificates)


def check_groups_of_order_two():
    report = enumerate_groups_of_order(3, 2)
    found = set(c.elements for c in report.groups)
    expected = set(tuple(sorted(g)) for g in GROUPS_OF_ORDER_TWO.values())
    symmetric = set(c.elements for c in report.groups if c.is_symmetric_subset)
    expected_symmetric = set(tuple(sorted(GROUPS_OF_ORDER_TWO[name]))
                             for name in SYMMETRIC_GROUPS_OF_ORDER_TWO)
    passed = found == expected and symmetric == expected_symmetric
    return passed, "{0} groups, {1} in Sym(X)".format(report.count, report.symmetric_count)


def check_idempotent_counts():
    counts = [len(enumerate_idempotents(n)) for n in range(1, 6)]
    oracle = [idempotent_count(n) for n in range(1, 6)]
    passed = counts == oracle == [1, 3, 10, 41, 196]
    return passed, "counts {0}, formula {1}".format(counts, oracle)


def check_membership_oracle():
    disagreements = [f for f in enumerate_transformations(4)
                     if not (membership_condition(f) == (containing_group_oracle(f) is not None)
                             == is_induced_bijective(f))]
    members = sum(1 for f in enumerate_transformations(4) if membership_condition(f))
    return len(disagreements) == 0, "{0} of 256 maps lie in a group".format(members)


def check_induced_identity():
    failures = [f for n in range(1, 5) for f in enumerate_transformations(n)
                if is_idempotent(f) != is_induced_identity(f)]
    return len(failures) == 0, "{0} disagreements".format(len(failures))


def check_common_kernel():
    groups = _small_groups()
    failures = [c for c in groups
                if any(kernel_partition(f) != c.common_kernel for f in c.elements)]
    return len(failures) == 0, "{0} groups checked".format(len(groups))


def check_representation():
    groups = _small_groups()
    failures = []
    for c in groups:
        rep = quotient_representation(c, c.elements)
        if not (rep.is_isomorphism and rep.is_closed and len(set(rep.perms)) == c.order):
            failures.append(c)
    return len(failures) == 0, "{0} groups checked".format(len(groups))


def check_union_intersection():
    report = probe_union_intersection(GROUPS_OF_ORDER_TWO['G1'], GROUPS_OF_ORDER_TWO['G2'])
    passed = (report.union.order == 4 and report.union.failure_reason == 'not closed'
              and report.intersection_empty)
    return passed, "union: {0}; intersection: {1}".format(
        report.union.failure_reason, 'empty' if report.intersection_empty else 'nonempty')


def check_regular_example():
    certificate = verify_group(GROUPS_OF_ORDER_TWO['G1'])
    e, s = Transformation((1, 1, 3)), Transformation((3, 3, 1))
    passed = (s in regular_witnesses(e, certificate, PAPER_LITERAL)
              and e in regular_witnesses(s, certificate, PAPER_LITERAL)
              and regularity_report(certificate, PAPER_LITERAL).is_regular)
    return passed, "G1 is regular under the literal reading"


def check_convention_divergence():
    certificate = verify_group(CYCLIC_ORDER_THREE)
    standard = regularity_report(certificate, STANDARD)
    literal = regularity_report(certificate, PAPER_LITERAL)
    empty = [f for f in certificate.elements
             if f != certificate.identity and len(literal.witnesses[f]) == 0]
    passed = (certificate.is_group and CYCLIC_ORDER_THREE <= maximal_group_at(certificate.identity)
              and standard.is_regular and not literal.is_regular and len(empty) == 2)
    return passed, "standard regular: {0}, literal regular: {1}".format(
        standard.is_regular, literal.is_regular)


def check_standard_inverse_unique():
    groups = _small_groups()
    failures = 0
    for c in groups:
        for f in c.elements:
            if paired_inverse_witnesses(f, c, STANDARD) != [c.inverse(f)]:
                failures += 1
    return failures == 0, "{0} groups checked".format(len(groups))


def check_projection_group():
    report = projection_report(5)
    c, rep = report.certificate, report.representation
    passed = (c.is_group and c.order == 4 and is_idempotent(c.identity)
              and c.identity.n == 25 and not c.is_symmetric_subset
              and len(c.common_kernel) == 5
              and all(len(block) == 5 for block in c.common_kernel.blocks)
              and rep.is_isomorphism and rep.is_cyclic())
    return passed, "order {0} on {1} blocks".format(c.order, len(c.common_kernel))


def check_path_agreement():
    orders = (1, 2, 3, 6)
    agree = [enumerate_groups_fast(3, k) == enumerate_groups_brute_force(3, k) for k in orders]
    return all(agree), "n=3, k in {0}".format(', '.join(str(k) for k in orders))


def check_determinism():
    first = dumps_json(enumerate_groups_of_order(3, 2, cross_check=False).to_dict())
    first += dumps_json(projection_report(5).to_dict())
    second = dumps_json(enumerate_groups_of_order(3, 2, cross_check=False).to_dict())
    second += dumps_json(projection_report(5).to_dict())
    return first == second, "repeated reports are byte-identical"


def check_paired_symmetry():
    groups = _small_groups()
    failures = [(c, conv) for c in groups for conv in CONVENTIONS
                if not is_paired_symmetric(c, conv)]
    return len(failures) == 0, "{0} groups checked".format(len(groups))


def observe_regular_implies_paired(convention):
    groups = _small_groups()
    holds = sum(1 for c in groups if regular_implies_paired(c, convention))
    return None, "holds for {0} of {1} groups".format(holds, len(groups))


def observe_inverse_groups(convention):
    groups = _small_groups()
    inverse = sum(1 for c in groups if regularity_report(c, convention).is_inverse_ng)
    return None, "{0} of {1} groups are inverse".format(inverse, len(groups))


CHECKS = [
    ('groups-of-order-two', 'All groups of order 2 at n=3', check_groups_of_order_two),
    ('idempotent-counts', 'Idempotent counts for n=1..5', check_idempotent_counts),
    ('membership', 'Im(f) = Im(f^2) agrees with the group search at n=4', check_membership_oracle),
    ('induced-identity', 'f^2 = f iff the induced map is the identity, n<=4', check_induced_identity),
    ('common-kernel', 'Elements of a group share one kernel, n<=4', check_common_kernel),
    ('representation', 'Quotient representation is an isomorphism, n<=4', check_representation),
    ('union-intersection', 'Union and intersection of G1 and G2', check_union_intersection),
    ('regular-example', 'Literal witnesses in G1', check_regular_example),
    ('convention-divergence', 'Cyclic group of order 3 at n=4', check_convention_divergence),
    ('standard-inverse', 'Standard paired witness is the group inverse, n<=4', check_standard_inverse_unique),
    ('projection-group', 'Projection group over F_5', check_projection_group),
    ('path-agreement', 'Anchored and brute-force enumeration agree', check_path_agreement),
    ('determinism', 'Reports are byte-identical across runs', check_determinism),
    ('paired-symmetry', 'Paired witnesses are symmetric, n<=4', check_paired_symmetry),
    ('regular-implies-paired-standard', 'Regular implies paired (standard)',
     functools.partial(observe_regular_implies_paired, STANDARD)),
    ('regular-implies-paired-literal', 'Regular implies paired (paper-literal)',
     functools.partial(observe_regular_implies_paired, PAPER_LITERAL)),
    ('inverse-groups-standard', 'Inverse groups (standard)',
     functools.partial(observe_inverse_groups, STANDARD)),
    ('inverse-groups-literal', 'Inverse groups (paper-literal)',
     functools.partial(observe_inverse_groups, PAPER_LITERAL)),
]


def run_paper_check():
    """
    Run every reproduction check and collect the results.

    Returns
    -------
    report : :class:`PaperCheckReport`
    """
    results = []
    for name, description, check in CHECKS:
        passed, detail = check()
        log.info("{0}: {1}".format(name, 'INFO' if passed is None else ('PASS' if passed else 'FAIL')))
        results.append(CheckResult(name, description, passed, detail))
    return PaperCheckReport(results)
