from __future__ import print_function, division


def read(filename):
    """
    Read a configuration file of ``key = value`` lines and return a
    dictionary

    Lines starting with ``#`` and blank lines are ignored. Values are
    converted to int, float or bool (``y``/``yes``/``n``/``no``) where
    possible and left as strings otherwise.
    """

    parameters = {}

    with open(filename) as f:
        for line in f:
            if '=' in line and line[0] != "#" and line.strip() != "":
                key, value = line.split('=', 1)
                parameters[key.strip()] = _convert(value.strip())

    return parameters


def _convert(value):
    try:
        return int(value)
    except ValueError:
        pass
    try:
        return float(value)
    except ValueError:
        pass
    if value.lower() in ['y', 'yes']:
        return True
    elif value.lower() in ['n', 'no']:
        return False
    return value
