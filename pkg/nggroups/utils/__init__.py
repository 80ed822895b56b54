from __future__ import print_function, division

from .validator import validate_integer, validate_images
from .io import (dumps_json, parse_transformation_set,
                 read_transformation_set)
