from __future__ import print_function, division

from .projection import *
