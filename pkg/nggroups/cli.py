from __future__ import print_function, division

import argparse
import sys

from astropy.logger import log

from .transformation import Transformation, image, power
from .group import (verify_group, membership_condition, containing_group_oracle,
                    quotient_representation, probe_union_intersection)
from .enumeration import (enumerate_idempotents, enumerate_groups_of_order,
                          idempotent_count)
from .regularity import CONVENTIONS, regularity_report
from .fieldgen import projection_report
from .paper_check import run_paper_check
from .utils import parfile
from .utils.io import dumps_json, parse_transformation_set, read_transformation_set

__all__ = ['RunConfig', 'run', 'main', 'COMMANDS', 'FORMATS']

COMMANDS = ('verify', 'quotient', 'enumerate-idempotents', 'enumerate-groups',
            'membership', 'regularity', 'probe', 'fieldgen', 'paper-check')

FORMATS = ('text', 'json')

# settings that may come from a configuration file
CONF_KEYS = ('format', 'n', 'order', 'p', 'convention', 'input', 'other_input',
             'cross_check', 'log_level')

# options each command cannot run without
REQUIRED = {
    'enumerate-idempotents': ('n',),
    'enumerate-groups': ('n', 'order'),
    'membership': ('f',),
    'fieldgen': ('p',),
}

OPTIONS = {'n': '-n', 'order': '--order', 'f': '--f', 'p': '--p'}

SET_COMMANDS = ('verify', 'quotient', 'regularity', 'probe')


class RunConfig(object):
    """
    The settings of one command-line run.

    Parameters
    ----------
    command : str
        One of ``COMMANDS``.
    n, order, p : int, optional
        Degree, group order and field characteristic.
    convention : str, optional
        Regularity convention; required by ``regularity``.
    format : str, optional
        ``'text'`` (default) or ``'json'``.
    input, other_input : str, optional
        Files with one transformation per line.
    set_literal, other_set_literal : str, optional
        Inline sets such as ``"(1,1,3);(3,3,1)"``.
    f : str, optional
        A single transformation, for ``membership``.
    cayley : bool, optional
        Print the Cayley table with ``verify``.
    cross_check : bool, optional
        Run the brute-force comparison with ``enumerate-groups``.
    log_level : str, optional

    Options a command cannot run without (``-n`` for enumeration, a set
    for ``verify``, and so on) are checked here and raise `ValueError`.
    """

    def __init__(self, command, n=None, order=None, p=None, convention=None,
                 format='text', input=None, other_input=None, set_literal=None,
                 other_set_literal=None, f=None, cayley=False, cross_check=True,
                 log_level='WARNING'):

        if command not in COMMANDS:
            raise ValueError("command should be one of {0}".format(', '.join(COMMANDS)))
        if format not in FORMATS:
            raise ValueError("format should be one of {0}".format(', '.join(FORMATS)))
        if convention is not None and convention not in CONVENTIONS:
            raise ValueError("convention should be one of {0}".format(', '.join(CONVENTIONS)))
        if command == 'regularity' and convention is None:
            raise ValueError("convention should be given for regularity")
        if not isinstance(cross_check, bool):
            raise ValueError("cross_check should be yes or no")

        self.command = command
        self.n = n
        self.order = order
        self.p = p
        self.convention = convention
        self.format = format
        self.input = input
        self.other_input = other_input
        self.set_literal = set_literal
        self.other_set_literal = other_set_literal
        self.f = f
        self.cayley = cayley
        self.cross_check = cross_check
        self.log_level = log_level

        self._check_required()

    def _check_required(self):
        for name in REQUIRED.get(self.command, ()):
            if getattr(self, name) is None:
                raise ValueError("{0} should be given with {1}".format(name, OPTIONS[name]))
        if self.command in SET_COMMANDS and self.set_literal is None and self.input is None:
            raise ValueError("a set of transformations should be given with --set/--input")
        if self.command == 'probe' and self.other_set_literal is None and self.other_input is None:
            raise ValueError("a second set of transformations should be given with --other-set/--other-input")

    @classmethod
    def from_args(cls, args):
        """
        Build the configuration from parsed arguments, taking defaults from
        the configuration file given with ``--config`` if any.
        """
        settings = {}
        if getattr(args, 'config', None) is not None:
            conf = parfile.read(args.config)
            for key in CONF_KEYS:
                if key in conf:
                    settings[key] = conf[key]
        for key in CONF_KEYS:
            value = getattr(args, key, None)
            if value is not None:
                settings[key] = value
        if getattr(args, 'no_cross_check', False):
            settings['cross_check'] = False
        return cls(args.command,
                   set_literal=getattr(args, 'set', None),
                   other_set_literal=getattr(args, 'other_set', None),
                   f=getattr(args, 'f', None),
                   cayley=getattr(args, 'cayley', False),
                   **settings)

    def elements(self, other=False):
        literal = self.other_set_literal if other else self.set_literal
        filename = self.other_input if other else self.input
        if literal is not None:
            return parse_transformation_set(literal)
        return read_transformation_set(filename)


def _render(config, report, text=None):
    if config.format == 'json':
        return dumps_json(report.to_dict() if hasattr(report, 'to_dict') else report)
    return str(report) if text is None else text


def _verify(config):
    certificate = verify_group(config.elements())
    text = str(certificate)
    if config.cayley and certificate.order > 0 and certificate.failure_reason != 'degree mismatch':
        text += "\n" + "\n".join(certificate.cayley.to_table().pformat(max_lines=-1, max_width=-1)) + "\n"
    return 0, _render(config, certificate, text)


def _quotient(config):
    elements = config.elements()
    certificate = verify_group(elements)
    if not certificate.is_group:
        report = {'certificate': certificate.to_dict(), 'representation': None}
        return 0, _render(config, report, str(certificate) + "\nnot a group: no quotient representation\n")
    representation = quotient_representation(certificate, elements)
    report = {'certificate': certificate.to_dict(), 'representation': representation.to_dict()}
    return 0, _render(config, report, str(certificate) + "\n" + str(representation))


def _enumerate_idempotents(config):
    n = config.n
    idempotents = enumerate_idempotents(n)
    report = {'n': n, 'count': len(idempotents), 'oracle_count': idempotent_count(n),
              'idempotents': [e.to_list() for e in idempotents]}
    text = "n     : %i\ncount : %i\n" % (n, len(idempotents))
    text += "".join("%s\n" % e for e in idempotents)
    return 0, _render(config, report, text)


def _enumerate_groups(config):
    report = enumerate_groups_of_order(config.n, config.order,
                                       cross_check=config.cross_check)
    return 0, _render(config, report)


def _membership(config):
    f = Transformation.from_string(config.f)
    member = membership_condition(f)
    group = containing_group_oracle(f)
    report = {
        'f': f.to_list(),
        'member': member,
        'image': image(f).to_list(),
        'image_squared': image(power(f, 2)).to_list(),
        'oracle_group': None if group is None else [g.to_list() for g in sorted(group)],
    }
    text = "f           : %s\n" % f
    text += "member      : %s\n" % ('yes' if member else 'no')
    text += "Im(f)       : %s\n" % image(f)
    text += "Im(f^2)     : %s\n" % image(power(f, 2))
    text += "cyclic group: %s\n" % ('absent' if group is None else ' '.join(str(g) for g in sorted(group)))
    return 0, _render(config, report, text)


def _regularity(config):
    certificate = verify_group(config.elements())
    if not certificate.is_group:
        raise ValueError("set is not a group ({0})".format(certificate.failure_reason))
    return 0, _render(config, regularity_report(certificate, config.convention))


def _probe(config):
    return 0, _render(config, probe_union_intersection(config.elements(), config.elements(other=True)))


def _fieldgen(config):
    return 0, _render(config, projection_report(config.p))


def _paper_check(config):
    report = run_paper_check()
    return (0 if report.passed else 1), _render(config, report)


DISPATCH = {
    'verify': _verify,
    'quotient': _quotient,
    'enumerate-idempotents': _enumerate_idempotents,
    'enumerate-groups': _enumerate_groups,
    'membership': _membership,
    'regularity': _regularity,
    'probe': _probe,
    'fieldgen': _fieldgen,
    'paper-check': _paper_check,
}


def run(config):
    """
    Run one command.

    Parameters
    ----------
    config : :class:`RunConfig`

    Returns
    -------
    status : int
        0 on success (including negative mathematical answers), 1 for
        invalid input or a failed reproduction check.
    output : str
        The report, or an error message when ``status`` is 1.
    """
    log.setLevel(config.log_level)
    try:
        return DISPATCH[config.command](config)
    except (ValueError, TypeError, IOError) as exc:
        return 1, "error: {0}\n".format(exc)


def build_parser():

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default=None,
                        help="output format (default: text)")
    common.add_argument('--config', default=None,
                        help="configuration file with key = value defaults")
    common.add_argument('--log-level', dest='log_level', default=None,
                        choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'))

    one_set = argparse.ArgumentParser(add_help=False)
    one_set.add_argument('--set', default=None,
                         help='transformations separated by ";", e.g. "(1,1,3);(3,3,1)"')
    one_set.add_argument('--input', default=None,
                         help="file with one transformation per line")

    parser = argparse.ArgumentParser(prog='nggroups',
                                     description="Groups of transformations of finite sets")
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    p = subparsers.add_parser('verify', parents=[common, one_set],
                              help="decide whether a set is a group")
    p.add_argument('--cayley', action='store_true', help="print the Cayley table")

    subparsers.add_parser('quotient', parents=[common, one_set],
                          help="permutation representation on the quotient set")

    p = subparsers.add_parser('enumerate-idempotents', parents=[common],
                              help="list all idempotents of degree n")
    p.add_argument('-n', type=int, default=None)

    p = subparsers.add_parser('enumerate-groups', parents=[common],
                              help="list all groups of degree n and a given order")
    p.add_argument('-n', type=int, default=None)
    p.add_argument('--order', type=int, default=None)
    p.add_argument('--no-cross-check', dest='no_cross_check', action='store_true',
                   help="skip the brute-force comparison")

    p = subparsers.add_parser('membership', parents=[common],
                              help="decide whether a transformation lies in a group")
    p.add_argument('--f', default=None, help='a transformation, e.g. "(1,1,2)"')

    p = subparsers.add_parser('regularity', parents=[common, one_set],
                              help="regular and paired witnesses")
    p.add_argument('--convention', choices=CONVENTIONS, default=None)

    p = subparsers.add_parser('probe', parents=[common, one_set],
                              help="union and intersection of two groups")
    p.add_argument('--other-set', dest='other_set', default=None)
    p.add_argument('--other-input', dest='other_input', default=None)

    p = subparsers.add_parser('fieldgen', parents=[common],
                              help="projection group over F_p")
    p.add_argument('--p', type=int, default=None)

    subparsers.add_parser('paper-check', parents=[common],
                          help="run all reproduction checks")

    return parser


def main(argv=None):

    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = RunConfig.from_args(args)
    except (ValueError, IOError) as exc:
        parser.error(str(exc))

    status, output = run(config)

    if status == 1 and output.startswith('error: '):
        sys.stderr.write(output)
    else:
        sys.stdout.write(output)

    return status
