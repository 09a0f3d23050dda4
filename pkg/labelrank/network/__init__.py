"""Graph data structure and synthetic graphs"""

from .graph import *
from .benchmark import *
