from __future__ import print_function, division

from .cayley import *
from .certificate import *
from .membership import *
from .representation import *
from .probe import *
