"""Readers and writers (edge lists, partitions, result documents)"""

from .edgelist import *
from .document import *
