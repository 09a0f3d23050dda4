__version__ = "0.1.0"
import os

import colorlog

# Single package logger, coloured on stderr
logger = colorlog.getLogger("labelrank")
if not logger.handlers:
    _handler = colorlog.StreamHandler()
    _handler.setFormatter(colorlog.ColoredFormatter(
        "%(log_color)s%(levelname)-8s%(reset)s %(name)s: %(message)s"))
    logger.addHandler(_handler)
logger.setLevel("WARNING")


def labelrank_debug_level(level="WARNING"):
    """A debug level setter at top level of the library"""
    valid = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
    if level not in valid:
        raise ValueError("logging level must be one of %s. Provided %s" % (valid, level))
    logger.setLevel(level)


from labelrank.errors import *

from labelrank import network
from labelrank.network import *

from labelrank import io
from labelrank.io import *

from labelrank import metrics
from labelrank.metrics import *

from labelrank import core
from labelrank.core import *

from labelrank import lpa
from labelrank.lpa import *


def labelrank_data(filename, where=None):
    """Simple utilities to retrieve data sets from labelrank/data directory

    ::

        >>> from labelrank import labelrank_data, load_edge_list
        >>> g = load_edge_list(labelrank_data("karate.txt"))

    """
    share = os.sep.join([os.path.dirname(os.path.abspath(__file__)), 'data'])
    if where:
        filename = os.sep.join([share, where, filename])
    else:
        filename = os.sep.join([share, filename])
    if os.path.exists(filename) is False:
        raise IOError('unknown file %s' % filename)
    return filename
