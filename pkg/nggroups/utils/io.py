from __future__ import print_function, division

import json

from astropy.logger import log

__all__ = ['dumps_json', 'parse_transformation_set', 'read_transformation_set']


def dumps_json(obj):
    """
    Serialize a report dictionary to JSON with sorted keys and a fixed
    indentation, so that identical reports give byte-identical output.
    """
    return json.dumps(obj, sort_keys=True, indent=2, separators=(',', ': ')) + '\n'


def _check_set(elements, origin):

    if len(elements) == 0:
        raise ValueError("no transformations found in {0}".format(origin))

    degrees = sorted(set(f.n for f in elements))
    if len(degrees) > 1:
        raise ValueError("degree mismatch: {0} contains transformations of "
                         "degrees {1}".format(origin, ', '.join(str(d) for d in degrees)))

    return frozenset(elements)


def parse_transformation_set(literal):
    """
    Parse a set literal such as ``"(1,1,3);(3,3,1)"``.

    Parameters
    ----------
    literal : str
        Transformations in tuple notation separated by ``;``.

    Returns
    -------
    elements : frozenset of :class:`~nggroups.transformation.Transformation`
    """
    from ..transformation import Transformation
    elements = [Transformation.from_string(token)
                for token in literal.split(';') if token.strip() != '']
    return _check_set(elements, 'set literal')


def read_transformation_set(filename):
    """
    Read a set of transformations from a file.

    The file should contain one transformation per line in tuple notation,
    for example ``(1,1,3)``. Anything after a ``#`` is ignored, as are blank
    lines.

    Parameters
    ----------
    filename : str
        The name of the file to read.
    """
    from ..transformation import Transformation
    elements = []
    with open(filename) as f:
        for line in f:
            line = line.split('#', 1)[0].strip()
            if line != '':
                elements.append(Transformation.from_string(line))
    log.debug("Read {0} transformations from {1}".format(len(elements), filename))
    return _check_set(elements, filename)
