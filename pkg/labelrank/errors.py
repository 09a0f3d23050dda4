"""Exceptions raised by labelrank"""

__all__ = ["LabelRankError", "GraphFormatError", "EmptyGraphError",
           "SelfloopError", "PartitionError"]


class LabelRankError(Exception):
    """Base class of all labelrank errors"""


class GraphFormatError(LabelRankError, ValueError):
    """An edge-list (or partition) file could not be interpreted

    :attr:`lineno` is the 1-based line number of the offending line (None
    when the error is not attached to a line).
    """
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = "line %s: %s" % (lineno, message)
        super(GraphFormatError, self).__init__(message)
        self.lineno = lineno


class EmptyGraphError(GraphFormatError):
    """The input does not contain a single edge"""


class SelfloopError(LabelRankError):
    """Label distributions require every node to be its own neighbour"""


class PartitionError(LabelRankError, ValueError):
    """A partition does not cover the expected node set"""
