# -*- coding: utf-8 -*-
"""Quality of a partition: Newman modularity and partition agreement

"""
import numpy as np
from easydev import AttrDict

from labelrank import logger
from labelrank.errors import PartitionError

__all__ = ["modularity", "modularity_naive", "compare_partitions"]


def _check_cover(graph, partition):
    if len(partition) != graph.node_count:
        raise PartitionError("partition covers %s nodes, graph has %s" % (len(partition),
            graph.node_count))


def modularity(graph, partition):
    r"""Return the modularity Q of a partition

    :param graph: a :class:`~labelrank.network.graph.Graph`. Selfloops are
        ignored, so that Q of a LabelRank partition is computed on the
        original structure.
    :param partition: a :class:`~labelrank.metrics.partition.Partition`

    .. math::

        Q = \sum_c \left[ \frac{e_c}{m} - \left(\frac{d_c}{2m}\right)^2 \right]

    where :math:`e_c` is the number of edges inside community c and
    :math:`d_c` the total degree of its members. A graph without edge has
    Q=0 (a warning is emitted).
    """
    _check_cover(graph, partition)
    graph = graph.remove_selfloops()
    m = graph.edge_count
    if m == 0:
        logger.warning("modularity of a graph without edge is set to 0")
        return 0.0

    labels = partition.assignment
    rows = np.repeat(np.arange(graph.node_count), graph.degrees)
    # each intra-community edge appears twice in the CSR arrays
    inside = np.count_nonzero(labels[rows] == labels[graph.indices]) / 2.
    totals = np.bincount(labels, weights=graph.degrees.astype(np.float64),
        minlength=graph.node_count)
    return float(inside / m - np.sum((totals / (2. * m)) ** 2))


def modularity_naive(graph, partition):
    r"""Direct double sum, for small graphs and cross-checks

    .. math::

        Q = \frac{1}{2m} \sum_{ij} \left(A_{ij} - \frac{k_i k_j}{2m}\right) \delta(c_i, c_j)

    """
    _check_cover(graph, partition)
    graph = graph.remove_selfloops()
    m = graph.edge_count
    if m == 0:
        logger.warning("modularity of a graph without edge is set to 0")
        return 0.0
    A = graph.to_scipy().toarray()
    k = A.sum(axis=1)
    labels = partition.assignment
    delta = labels[:, None] == labels[None, :]
    return float(np.sum((A - np.outer(k, k) / (2. * m)) * delta) / (2. * m))


def _same_pairs(counts):
    counts = np.asarray(counts, dtype=np.float64)
    return float(np.sum(counts * (counts - 1) / 2.))


def compare_partitions(p1, p2):
    """Compare two partitions of the same node set

    :return: a dictionary (AttrDict) with

        * **identical**: True if both partitions group the nodes the same way
        * **agreement**: fraction of node pairs put together in both or apart
          in both partitions (1.0 for fewer than 2 nodes)

    :raises PartitionError: if the node counts differ

    ::

        >>> res = compare_partitions(Partition([0, 1, 2, 3]), Partition([0, 0, 0, 0]))
        >>> res.agreement
        0.0

    """
    if len(p1) != len(p2):
        raise PartitionError("partitions cover %s and %s nodes" % (len(p1), len(p2)))
    n = len(p1)
    identical = p1 == p2
    total = n * (n - 1) / 2.
    if total == 0:
        return AttrDict(identical=identical, agreement=1.0)

    a, b = p1.assignment, p2.assignment
    together1 = _same_pairs(np.bincount(a))
    together2 = _same_pairs(np.bincount(b))
    _, joint = np.unique(a * n + b, return_counts=True)
    together_both = _same_pairs(joint)
    apart_both = total - together1 - together2 + together_both
    agreement = (together_both + apart_both) / total
    return AttrDict(identical=identical, agreement=float(agreement))
