"""Partitions and their quality (modularity, agreement)"""

from .partition import *
from .modularity import *
