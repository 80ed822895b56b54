from __future__ import print_function, division

from .regularity import *
