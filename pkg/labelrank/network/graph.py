# -*- python -*-
#
#  This file is part of labelrank software
#
#  Distributed under the terms of the 3-clause BSD license.
#
##############################################################################
"""Undirected, unweighted graphs stored as compressed sparse rows"""
import numpy as np
import scipy.sparse as sp

__all__ = ["Graph", "add_selfloops", "neighbors"]


class Graph(object):
    """Immutable undirected graph in CSR layout

    The neighbours of node *i* are ``indices[indptr[i]:indptr[i+1]]``,
    sorted in ascending order and without duplicates. A selfloop on node
    *i* is stored once, as *i* in its own neighbour list, so that the
    degree :math:`k_i = |Nb(i)|` counts it once.

    Graphs are usually created by :func:`~labelrank.io.edgelist.load_edge_list`
    but can be built directly from pairs of dense identifiers::

        >>> from labelrank import Graph
        >>> g = Graph.from_edges([(0, 1), (1, 2), (2, 0)])
        >>> g.node_count, g.edge_count
        (3, 3)
        >>> g.add_selfloops().neighbors(0)
        [0, 1, 2]

    :attr:`names` keeps the external identifiers (strings) of the nodes so
    that outputs can be written with the original ids.
    """
    def __init__(self, indptr, indices, names=None):
        """.. rubric:: constructor

        :param indptr: CSR offsets, length n+1
        :param indices: CSR neighbour ids, sorted within each row
        :param list names: optional external identifiers of the n nodes
        """
        self._indptr = np.asarray(indptr, dtype=np.int64)
        self._indices = np.asarray(indices, dtype=np.int64)
        self._indptr.setflags(write=False)
        self._indices.setflags(write=False)
        n = len(self._indptr) - 1
        if names is None:
            names = [str(i) for i in range(n)]
        if len(names) != n:
            raise ValueError("expected %s node names, got %s" % (n, len(names)))
        self._names = tuple(str(x) for x in names)
        self._adjacency = None
        self._selfloops = None

    @classmethod
    def from_edges(cls, edges, node_count=None, names=None):
        """Build a graph from pairs of dense identifiers

        Direction is ignored and duplicated edges are collapsed. A pair
        (i, i) adds a selfloop.

        :param edges: iterable of (i, j) pairs of integers in [0, n)
        :param int node_count: number of nodes (default: largest id + 1)
        :param list names: external identifiers
        """
        edges = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if node_count is None:
            node_count = int(edges.max()) + 1 if len(edges) else 0
        if len(edges) and (edges.min() < 0 or edges.max() >= node_count):
            raise IndexError("edge endpoint out of range [0, %s)" % node_count)
        rows = np.concatenate([edges[:, 0], edges[:, 1]])
        cols = np.concatenate([edges[:, 1], edges[:, 0]])
        return cls._from_coordinates(rows, cols, node_count, names)

    @classmethod
    def _from_coordinates(cls, rows, cols, node_count, names):
        data = np.ones(len(rows), dtype=np.int32)
        matrix = sp.csr_matrix((data, (rows, cols)), shape=(node_count, node_count))
        # duplicates are summed by scipy; only the structure matters
        matrix.sum_duplicates()
        matrix.sort_indices()
        return cls(matrix.indptr, matrix.indices, names=names)

    def _get_node_count(self):
        return len(self._indptr) - 1
    node_count = property(_get_node_count, doc="number of nodes n")

    def _get_indptr(self):
        return self._indptr
    indptr = property(_get_indptr, doc="CSR offsets (read-only array)")

    def _get_indices(self):
        return self._indices
    indices = property(_get_indices, doc="CSR neighbour ids (read-only array)")

    def _get_degrees(self):
        return np.diff(self._indptr)
    degrees = property(_get_degrees, doc="degree k_i of every node (selfloop counted once)")

    def _get_names(self):
        return self._names
    names = property(_get_names, doc="external identifiers of the nodes")

    def _get_selfloop_mask(self):
        rows = np.repeat(np.arange(self.node_count), self.degrees)
        return rows == self._indices
    selfloop_mask = property(_get_selfloop_mask,
        doc="boolean mask over :attr:`indices` flagging selfloop entries")

    def _get_selfloop_count(self):
        if self._selfloops is None:
            self._selfloops = int(self.selfloop_mask.sum())
        return self._selfloops
    selfloop_count = property(_get_selfloop_count)

    def _get_edge_count(self):
        loops = self.selfloop_count
        return (len(self._indices) - loops) // 2 + loops
    edge_count = property(_get_edge_count,
        doc="number of undirected edges m, a selfloop counting as one edge")

    def has_selfloops(self):
        """True if every node is its own neighbour"""
        return self.selfloop_count == self.node_count

    def neighbors(self, i):
        """Return the sorted neighbour list Nb(i)

        :raises IndexError: if i is not in [0, n)
        """
        if not 0 <= i < self.node_count:
            raise IndexError("node %s out of range [0, %s)" % (i, self.node_count))
        return self._indices[self._indptr[i]:self._indptr[i+1]].tolist()

    def degree(self, i):
        return len(self.neighbors(i))

    def edges(self):
        """Return the undirected edges as an (m, 2) array with i <= j"""
        rows = np.repeat(np.arange(self.node_count), self.degrees)
        keep = rows <= self._indices
        return np.column_stack([rows[keep], self._indices[keep]])

    def add_selfloops(self):
        """Return a new graph where every node is its own neighbour

        Existing selfloops are kept and not duplicated, so the operation is
        idempotent.
        """
        if self.has_selfloops():
            return self
        n = self.node_count
        rows = np.concatenate([np.repeat(np.arange(n), self.degrees), np.arange(n)])
        cols = np.concatenate([self._indices, np.arange(n)])
        return self._from_coordinates(rows, cols, n, self._names)

    def remove_selfloops(self):
        """Return a new graph without any selfloop"""
        if self.selfloop_count == 0:
            return self
        n = self.node_count
        rows = np.repeat(np.arange(n), self.degrees)
        keep = rows != self._indices
        return self._from_coordinates(rows[keep], self._indices[keep], n, self._names)

    def to_scipy(self):
        """Adjacency matrix A as a float scipy CSR matrix (A_ii=1 for selfloops)

        The matrix is cached; the graph being immutable, it must not be
        modified in place.
        """
        if self._adjacency is None:
            n = self.node_count
            data = np.ones(len(self._indices), dtype=np.float64)
            self._adjacency = sp.csr_matrix((data, self._indices.copy(),
                self._indptr.copy()), shape=(n, n))
        return self._adjacency

    def __len__(self):
        return self.node_count

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.names == other.names and
                np.array_equal(self._indptr, other._indptr) and
                np.array_equal(self._indices, other._indices))

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    __hash__ = None

    def __repr__(self):
        return "Graph(n=%s, m=%s, selfloops=%s)" % (self.node_count,
            self.edge_count, self.selfloop_count)


def add_selfloops(g):
    """Functional form of :meth:`Graph.add_selfloops`"""
    return g.add_selfloops()


def neighbors(g, i):
    """Functional form of :meth:`Graph.neighbors`"""
    return g.neighbors(i)
