"""Label propagation baseline (synchronous LPA)"""

from .lpa import *
