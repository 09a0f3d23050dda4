"""LabelRank: label distributions, operators, stop criterion and runner"""

from .params import *
from .distribution import *
from .labelrank import *
from .dense import *
