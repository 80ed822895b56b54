from __future__ import print_function, division

from .transformation import *
from .quotient import *
from .group import *
from .enumeration import *
from .regularity import *
from .fieldgen import *

from . import utils

__version__ = '0.1.dev0'
