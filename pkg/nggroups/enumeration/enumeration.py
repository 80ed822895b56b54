from __future__ import print_function, division

import functools
import itertools

import numpy as np
from astropy.logger import log
from astropy.table import Table
from scipy.special import comb, factorial

from ..transformation import (Transformation, image, is_idempotent,
                              kernel_partition, rank)
from ..group import NGCertificate, verify_group
from ..utils.validator import validate_integer

__all__ = ['MAX_DEGREE', 'MAX_GROUP_DEGREE', 'BRUTE_FORCE_MAX_DEGREE',
           'BRUTE_FORCE_LIMIT', 'EnumerationReport', 'enumerate_transformations',
           'enumerate_idempotents', 'idempotent_count', 'maximal_group_at',
           'subgroups_at', 'enumerate_groups_fast', 'enumerate_groups_brute_force',
           'enumerate_groups_of_order']

# Largest degree for which Trans(X) is streamed
MAX_DEGREE = 5

# Largest degree for group enumeration
MAX_GROUP_DEGREE = 4

# The brute-force path only runs up to this degree, and only when the number
# of k-subsets of Trans(X) is at most BRUTE_FORCE_LIMIT
BRUTE_FORCE_MAX_DEGREE = 3
BRUTE_FORCE_LIMIT = 300000

CHUNK_SIZE = 20000


def _check_degree(n, cap):
    n = validate_integer('n', n, domain='strictly-positive')
    if n > cap:
        raise ValueError("n={0} is above the enumeration cap of {1}".format(n, cap))
    return n


def _all_maps(n):
    # rows are the 0-indexed image tuples in lexicographic order
    return np.indices((n,) * n).reshape(n, -1).T.astype(np.intp)


def enumerate_transformations(n):
    """
    Iterate over all n^n transformations of {1..n} in lexicographic order of
    their image tuples.

    Parameters
    ----------
    n : int
        The degree, at most ``MAX_DEGREE``.
    """
    n = _check_degree(n, MAX_DEGREE)
    for row in _all_maps(n):
        yield Transformation._from_map(row)


def enumerate_idempotents(n):
    """
    All transformations f of {1..n} with f^2 = f, in lexicographic order.
    """
    n = _check_degree(n, MAX_DEGREE)
    maps = _all_maps(n)
    squares = np.take_along_axis(maps, maps, axis=1)
    idempotents = maps[np.all(squares == maps, axis=1)]
    log.debug("{0} idempotents at n={1}".format(len(idempotents), n))
    return [Transformation._from_map(row) for row in idempotents]


def idempotent_count(n):
    """
    The number of idempotent transformations of an n-element set, given by
    the sum over the rank k of C(n, k) k^(n - k).
    """
    n = validate_integer('n', n, domain='strictly-positive')
    return sum(int(comb(n, k, exact=True)) * k ** (n - k) for k in range(1, n + 1))


def maximal_group_at(e):
    """
    The largest group of transformations with identity ``e``.

    This is the set of all transformations with the same kernel and the
    same image as ``e``; it is certified as a group with identity ``e`` and
    checked to have order rank(e)!.

    Parameters
    ----------
    e : :class:`~nggroups.transformation.Transformation`
        An idempotent transformation.

    Returns
    -------
    elements : frozenset of :class:`~nggroups.transformation.Transformation`
    """

    if not is_idempotent(e):
        raise ValueError("{0} should be idempotent".format(e))

    kernel = kernel_partition(e)
    points = image(e).points

    # each element sends the blocks of the kernel bijectively onto the image
    elements = set()
    for targets in itertools.permutations(points):
        images = np.empty(e.n, dtype=np.intp)
        for block, target in zip(kernel.blocks, targets):
            images[np.array(block) - 1] = target
        elements.add(Transformation(images))

    certificate = verify_group(elements)
    expected = int(factorial(rank(e), exact=True))

    if not certificate.is_group or certificate.identity != e:
        raise RuntimeError("maximal set at {0} is not a group with identity {0}".format(e))
    if certificate.order != expected:
        raise RuntimeError("maximal group at {0} has order {1} instead of {2}".format(e, certificate.order, expected))

    return frozenset(elements)


def _close(table, members):
    members = set(members)
    queue = list(members)
    while queue:
        a = queue.pop()
        for b in list(members):
            for c in (table[a, b], table[b, a]):
                if c not in members:
                    members.add(c)
                    queue.append(c)
    return frozenset(members)


@functools.lru_cache(maxsize=None)
def subgroups_at(e):
    """
    All subgroups of the maximal group at the idempotent ``e``.

    Subgroups are built by repeatedly adjoining one element to a known
    subgroup and closing under composition, starting from {e}; a finite
    set of transformations closed under composition inside a group is a
    subgroup.

    Returns
    -------
    subgroups : tuple of frozenset
        Sorted by order, then by canonical element list.
    """
    certificate = verify_group(maximal_group_at(e))
    elements = certificate.elements
    table = certificate.cayley.table
    m = len(elements)

    trivial = frozenset([elements.index(e)])
    found = set([trivial])
    frontier = [trivial]

    while frontier:
        new = []
        for subgroup in frontier:
            for g in range(m):
                if g in subgroup:
                    continue
                closure = _close(table, subgroup | set([g]))
                if closure not in found:
                    found.add(closure)
                    new.append(closure)
        frontier = new

    log.debug("{0} subgroups in the maximal group at {1}".format(len(found), e))

    subgroups = [frozenset(elements[i] for i in subgroup) for subgroup in found]
    return tuple(sorted(subgroups, key=lambda s: (len(s), sorted(s))))


def _sort_groups(groups):
    return sorted(groups, key=lambda s: sorted(s))


def enumerate_groups_fast(n, k):
    """
    All groups of order ``k`` of transformations of {1..n}, found as
    subgroups of the maximal groups at each idempotent.

    Returns
    -------
    groups : list of frozenset
        Sorted by canonical element list.
    """
    n = _check_degree(n, MAX_GROUP_DEGREE)
    k = validate_integer('k', k, domain='strictly-positive')
    groups = set()
    for e in enumerate_idempotents(n):
        for subgroup in subgroups_at(e):
            if len(subgroup) == k:
                groups.add(subgroup)
    return _sort_groups(groups)


def enumerate_groups_brute_force(n, k):
    """
    All groups of order ``k`` of transformations of {1..n}, found by
    checking every k-subset of Trans(X).

    Subsets closed under composition are found with a vectorized test on
    the composition table of Trans(X) and are then passed to
    :func:`~nggroups.group.verify_group`.
    """
    n = _check_degree(n, BRUTE_FORCE_MAX_DEGREE)
    k = validate_integer('k', k, domain='strictly-positive')

    maps = _all_maps(n)
    m = len(maps)

    n_candidates = int(comb(m, k, exact=True))
    if n_candidates > BRUTE_FORCE_LIMIT:
        raise ValueError("{0} subsets of size {1} is above the brute-force limit of {2}".format(n_candidates, k, BRUTE_FORCE_LIMIT))

    log.info("Checking {0} subsets of size {1} at n={2}".format(n_candidates, k, n))

    # code of a map = position in lexicographic order
    weights = n ** np.arange(n - 1, -1, -1)
    products = maps[np.arange(m)[:, np.newaxis, np.newaxis], maps[np.newaxis, :, :]]
    table = products.dot(weights)

    elements = [Transformation._from_map(row) for row in maps]

    groups = []
    combinations = itertools.combinations(range(m), k)
    while True:
        chunk = np.array(list(itertools.islice(combinations, CHUNK_SIZE)), dtype=np.intp)
        if len(chunk) == 0:
            break
        cells = table[chunk[:, :, np.newaxis], chunk[:, np.newaxis, :]]
        closed = np.all(np.any(cells[..., np.newaxis] == chunk[:, np.newaxis, np.newaxis, :], axis=-1), axis=(1, 2))
        for subset in chunk[closed]:
            candidate = frozenset(elements[i] for i in subset)
            if verify_group(candidate).is_group:
                groups.append(candidate)

    return _sort_groups(groups)


class EnumerationReport(object):
    """
    All groups of transformations of a given degree and order.

    Parameters
    ----------
    n : int
        The degree.
    order : int
        The order of the groups.
    idempotents : list of :class:`~nggroups.transformation.Transformation`
    groups : list of :class:`~nggroups.group.NGCertificate`
    cross_checked : bool
        Whether the brute-force path confirmed the list.
    skipped : str, optional
        Why the brute-force comparison did not run.
    """

    def __init__(self, n, order, idempotents, groups, cross_checked=False, skipped=None):
        self.n = n
        self.order = order
        self.idempotents = list(idempotents)
        self.groups = sorted(groups, key=lambda c: c.elements)
        self.cross_checked = cross_checked
        self.skipped = skipped

    @property
    def count(self):
        return len(self.groups)

    @property
    def symmetric_count(self):
        return sum(1 for c in self.groups if c.is_symmetric_subset)

    @property
    def counts(self):
        """
        Number of groups in each (order, symmetric subset) cell
        """
        counts = {}
        for c in self.groups:
            key = (c.order, c.is_symmetric_subset)
            counts[key] = counts.get(key, 0) + 1
        return counts

    def to_table(self):
        t = Table()
        t['group'] = ['G{0}'.format(i + 1) for i in range(self.count)]
        t['identity'] = [c.identity.to_string() for c in self.groups]
        t['symmetric'] = ['yes' if c.is_symmetric_subset else 'no' for c in self.groups]
        t['elements'] = [' '.join(f.to_string() for f in c.elements) for c in self.groups]
        return t

    def __str__(self):
        string = "n               : %i\n" % self.n
        string += "order           : %i\n" % self.order
        string += "idempotents     : %i\n" % len(self.idempotents)
        string += "groups          : %i\n" % self.count
        string += "in Sym(X)       : %i\n" % self.symmetric_count
        if self.cross_checked:
            string += "cross-checked   : yes\n"
        elif self.skipped:
            string += "cross-checked   : no (%s)\n" % self.skipped
        else:
            string += "cross-checked   : no\n"
        if self.count > 0:
            string += "\n"
            string += "\n".join(self.to_table().pformat(max_lines=-1, max_width=-1))
            string += "\n"
        return string

    def to_dict(self):
        return {
            'n': self.n,
            'order': self.order,
            'count': self.count,
            'symmetric_count': self.symmetric_count,
            'cross_checked': self.cross_checked,
            'skipped': self.skipped,
            'idempotents': [e.to_list() for e in self.idempotents],
            'groups': [c.to_dict() for c in self.groups],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d['n'], d['order'],
                   [Transformation.from_list(v) for v in d['idempotents']],
                   [NGCertificate.from_dict(g) for g in d['groups']],
                   cross_checked=d['cross_checked'], skipped=d.get('skipped'))

    def __eq__(self, other):
        if not isinstance(other, EnumerationReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result


def enumerate_groups_of_order(n, k, cross_check=True):
    """
    Find all groups of order ``k`` of transformations of {1..n}.

    Groups are found inside the maximal group at each idempotent and
    certified with :func:`~nggroups.group.verify_group`. When ``cross_check``
    is set and the degree and the number of k-subsets are small enough, the
    list is compared with a brute-force search over all k-subsets of
    Trans(X).

    Parameters
    ----------
    n : int
        The degree, at most ``MAX_GROUP_DEGREE``.
    k : int
        The order of the groups.
    cross_check : bool, optional
        Whether to run the brute-force comparison when it is feasible.

    Returns
    -------
    report : :class:`EnumerationReport`
    """

    n = _check_degree(n, MAX_GROUP_DEGREE)
    k = validate_integer('k', k, domain='strictly-positive')

    idempotents = enumerate_idempotents(n)
    log.info("{0} idempotents found at n={1}".format(len(idempotents), n))

    groups = enumerate_groups_fast(n, k)

    certificates = []
    for group in groups:
        certificate = verify_group(group)
        if not certificate.is_group or certificate.order != k:
            raise RuntimeError("{0} failed verification".format(' '.join(str(f) for f in sorted(group))))
        certificates.append(certificate)

    cross_checked = False
    skipped = None
    n_candidates = int(comb(n ** n, k, exact=True))
    if not cross_check:
        skipped = "disabled"
    elif n > BRUTE_FORCE_MAX_DEGREE:
        skipped = "n={0} is above the brute-force cap of {1}".format(n, BRUTE_FORCE_MAX_DEGREE)
    elif n_candidates > BRUTE_FORCE_LIMIT:
        skipped = "{0} subsets is above the brute-force limit of {1}".format(n_candidates, BRUTE_FORCE_LIMIT)
        log.warning("Skipping brute-force cross-check at n={0}, k={1}: {2}".format(n, k, skipped))
    else:
        brute = enumerate_groups_brute_force(n, k)
        if brute != groups:
            raise RuntimeError("idempotent-anchored and brute-force enumeration disagree "
                               "at n={0}, k={1} ({2} and {3} groups)".format(n, k, len(groups), len(brute)))
        cross_checked = True

    log.info("{0} groups of order {1} found at n={2}".format(len(certificates), k, n))

    return EnumerationReport(n, k, idempotents, certificates,
                             cross_checked=cross_checked, skipped=skipped)
