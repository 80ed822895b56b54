from __future__ import print_function, division

from .partition import *
from .induced import *
