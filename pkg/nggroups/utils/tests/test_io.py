import os
import json

import pytest

from ..io import dumps_json, parse_transformation_set, read_transformation_set
from ...transformation import Transformation

DATA = os.path.join(os.path.dirname(__file__), 'data')


def test_dumps_json():
    string = dumps_json({'b': [1, 2], 'a': None})
    assert string == '{\n  "a": null,\n  "b": [\n    1,\n    2\n  ]\n}\n'
    assert json.loads(string) == {'a': None, 'b': [1, 2]}


def test_parse_set():
    elements = parse_transformation_set('(1,1,3);(3,3,1)')
    assert elements == frozenset([Transformation((1, 1, 3)), Transformation((3, 3, 1))])
    assert parse_transformation_set(' (1,2) ; (1,2) ;') == frozenset([Transformation((1, 2))])


def test_parse_set_invalid():
    with pytest.raises(ValueError) as exc:
        parse_transformation_set(' ; ')
    assert exc.value.args[0] == 'no transformations found in set literal'
    with pytest.raises(ValueError) as exc:
        parse_transformation_set('(1,1,3);(1,2)')
    assert exc.value.args[0] == 'degree mismatch: set literal contains transformations of degrees 2, 3'
    with pytest.raises(ValueError):
        parse_transformation_set('(1,1,3),(3,3,1)')


def test_read_set():
    elements = read_transformation_set(os.path.join(DATA, 'g1.txt'))
    assert sorted(elements) == [Transformation((1, 1, 3)), Transformation((3, 3, 1))]


def test_read_set_empty(tmpdir):
    filename = tmpdir.join('empty.txt').strpath
    with open(filename, 'w') as f:
        f.write('# nothing here\n\n')
    with pytest.raises(ValueError) as exc:
        read_transformation_set(filename)
    assert exc.value.args[0] == 'no transformations found in {0}'.format(filename)
