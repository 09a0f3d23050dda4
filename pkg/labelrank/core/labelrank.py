# -*- python -*-
#
#  This file is part of labelrank software
#
#  Distributed under the terms of the 3-clause BSD license.
#
##############################################################################
"""LabelRank dynamics on sparse label distributions

The label distributions of all the nodes are the rows of a sparse n x n
matrix P (rows are nodes, columns are labels). One iteration reads the
previous P only and builds a new one::

    P' = cutoff(inflate(propagate(P)))
    P  = conditional_update(P, P')

The run stops when a value of numChange (number of updated nodes) has been
seen **stop_frequency** times or when no node is updated.

::

    >>> from labelrank import labelrank_data, load_edge_list, run_labelrank, Params
    >>> g = load_edge_list(labelrank_data("karate.txt"))
    >>> result = run_labelrank(g, Params(inflation=2, update_fraction=0.6))
    >>> communities = result.partition.communities

"""
import time
from collections import Counter, namedtuple

import numpy as np
import pandas as pd
import scipy.sparse as sp

from labelrank import logger
from labelrank.errors import SelfloopError
from labelrank.core.distribution import LabelDistribution, MaxLabelSet
from labelrank.core.params import Params
from labelrank.metrics.modularity import modularity
from labelrank.metrics.partition import Partition
from labelrank.tools import worker_count, run_concurrently, row_chunks

__all__ = ["Distributions", "StopTracker", "IterationTrace", "LabelRankResult",
    "init_distributions", "propagate", "conditional_update", "count_max_label_changes",
    "record_and_check_stop", "labelrank_step", "run_labelrank",
    "extract_communities", "average_label_count"]

#: below this number of rows, propagation is not split across workers
PARALLEL_MIN_ROWS = 4096

# s_i and q*k_i are compared with this slack; q*k_i may be an integer up to rounding
_UPDATE_SLACK = 1e-9


class Distributions(object):
    """Label distributions of all the nodes, as a sparse matrix

    Row i holds P_i. Rows are never empty and sum to 1. Instances are
    immutable: every operator returns a new instance.
    """
    def __init__(self, matrix):
        """.. rubric:: constructor

        :param matrix: a scipy sparse matrix, one row per node
        """
        matrix = sp.csr_matrix(matrix, dtype=np.float64, copy=True)
        matrix.sum_duplicates()
        matrix.eliminate_zeros()
        matrix.sort_indices()
        if np.any(np.diff(matrix.indptr) == 0):
            raise ValueError("every node must hold at least one label")
        self._matrix = matrix

    @classmethod
    def initial(cls, graph):
        """Each node sees each of its neighbours with probability 1/k_i

        :raises SelfloopError: if a node is not its own neighbour
        """
        if not graph.has_selfloops():
            raise SelfloopError("add selfloops before initialising the distributions")
        n = graph.node_count
        data = np.repeat(1. / graph.degrees, graph.degrees)
        return cls(sp.csr_matrix((data, graph.indices.copy(), graph.indptr.copy()),
            shape=(n, n)))

    @classmethod
    def from_rows(cls, rows, label_count=None):
        """Stack a list of :class:`LabelDistribution`"""
        rows = list(rows)
        largest = max(int(r.labels.max()) for r in rows) if rows else -1
        if label_count is None:
            label_count = max(len(rows), largest + 1)
        indptr = np.cumsum([0] + [len(r) for r in rows])
        indices = np.concatenate([r.labels for r in rows]) if rows else []
        data = np.concatenate([r.probabilities for r in rows]) if rows else []
        return cls(sp.csr_matrix((data, indices, indptr), shape=(len(rows), label_count)))

    @classmethod
    def from_dense(cls, array):
        return cls(sp.csr_matrix(np.asarray(array, dtype=np.float64)))

    def _get_matrix(self):
        return self._matrix.copy()
    matrix = property(_get_matrix, doc="copy of the sparse matrix P")

    def _get_node_count(self):
        return self._matrix.shape[0]
    node_count = property(_get_node_count)

    def _get_support_sizes(self):
        return np.diff(self._matrix.indptr)
    support_sizes = property(_get_support_sizes, doc="number of labels held by each node")

    def _rows(self):
        return np.repeat(np.arange(self.node_count), self.support_sizes)

    def _reduce(self, ufunc, values):
        # rows are never empty, so reduceat segments are well defined
        return ufunc.reduceat(values, self._matrix.indptr[:-1])

    def _build(self, data, keep=None):
        m = self._matrix
        if keep is None:
            out = sp.csr_matrix((data, m.indices.copy(), m.indptr.copy()), shape=m.shape)
        else:
            counts = np.add.reduceat(keep.astype(np.int64), m.indptr[:-1])
            indptr = np.concatenate([[0], np.cumsum(counts)])
            out = sp.csr_matrix((data[keep], m.indices[keep], indptr), shape=m.shape)
        return Distributions(out)

    def row_sums(self):
        return self._reduce(np.add, self._matrix.data)

    def normalised(self):
        """Rescale every row to sum to 1"""
        data = self._matrix.data / self.row_sums()[self._rows()]
        return self._build(data)

    def propagate(self, graph, workers=None):
        """P'_i = sum of P_j over Nb(i), divided by k_i, then renormalised

        Rows may be computed by several workers; each row only depends on
        the previous matrix so the result does not depend on the split.
        """
        if not graph.has_selfloops():
            raise SelfloopError("propagation expects a graph with selfloops")
        A = graph.to_scipy()
        P = self._matrix
        workers = worker_count(workers)
        if workers > 1 and self.node_count >= PARALLEL_MIN_ROWS:
            chunks = row_chunks(self.node_count, workers)
            blocks = run_concurrently(lambda ab: A[ab[0]:ab[1]].dot(P), chunks,
                workers=workers)
            product = sp.vstack(blocks, format="csr")
        else:
            product = A.dot(P).tocsr()
        product.sum_duplicates()
        product.sort_indices()
        degrees = graph.degrees.astype(np.float64)
        product.data /= np.repeat(degrees, np.diff(product.indptr))
        return Distributions(product).normalised()

    def inflate(self, inflation):
        """Raise probabilities to the power inflation and renormalise rows"""
        if inflation == 1:
            return self
        data = self._matrix.data ** inflation
        rows = self._rows()
        data = data / self._reduce(np.add, data)[rows]
        # an underflow to 0 is removed by the constructor
        return self._build(data)

    def _row_max(self):
        return self._reduce(np.maximum, self._matrix.data)

    def max_label_mask(self, tol=1e-9):
        """Boolean mask over the stored entries flagging the maximum labels"""
        return self._matrix.data >= self._row_max()[self._rows()] - tol

    def cutoff(self, r, tol=1e-9):
        """Drop the labels with p < r - tol and renormalise

        A row that would become empty keeps its maximum labels.
        """
        data = self._matrix.data
        keep = data >= r - tol
        if keep.all():
            return self
        rows = self._rows()
        survivors = self._reduce(np.add, keep.astype(np.int64))
        keep |= (survivors[rows] == 0) & self.max_label_mask(tol)
        if keep.all():
            return self
        return self._build(data, keep).normalised()

    def max_label_matrix(self, tol=1e-9):
        """Sparse 0/1 matrix whose row i is the indicator of C*_i"""
        keep = self.max_label_mask(tol)
        return self._build(np.ones(len(keep)), keep)._matrix

    def max_label_sets(self, tol=1e-9):
        M = self.max_label_matrix(tol)
        return [MaxLabelSet(M.indices[M.indptr[i]:M.indptr[i+1]])
                for i in range(self.node_count)]

    def community_labels(self, tol=1e-9):
        """Smallest maximum label of every node"""
        big = np.iinfo(np.int64).max
        candidates = np.where(self.max_label_mask(tol),
            self._matrix.indices.astype(np.int64), big)
        return self._reduce(np.minimum, candidates)

    def average_label_count(self):
        return float(self._matrix.nnz) / self.node_count

    def allclose(self, other, atol=1e-9):
        """Same support and entries within atol"""
        a, b = self._matrix, other._matrix
        if a.shape != b.shape:
            return False
        if not (np.array_equal(a.indptr, b.indptr) and np.array_equal(a.indices, b.indices)):
            return False
        return bool(np.all(np.abs(a.data - b.data) <= atol))

    def __getitem__(self, i):
        m = self._matrix
        start, stop = m.indptr[i], m.indptr[i+1]
        return LabelDistribution(m.indices[start:stop], m.data[start:stop])

    def __len__(self):
        return self.node_count

    def __iter__(self):
        for i in range(self.node_count):
            yield self[i]

    def __eq__(self, other):
        if not isinstance(other, Distributions):
            return NotImplemented
        a, b = self._matrix, other._matrix
        return (a.shape == b.shape and np.array_equal(a.indptr, b.indptr) and
                np.array_equal(a.indices, b.indices) and np.array_equal(a.data, b.data))

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    __hash__ = None

    def __repr__(self):
        return "Distributions(nodes=%s, labels=%s)" % (self.node_count, self._matrix.nnz)


def _as_distributions(P):
    if isinstance(P, Distributions):
        return P
    return Distributions.from_rows(P)


def init_distributions(graph):
    """Initial distributions of a graph with selfloops (functional form)"""
    return Distributions.initial(graph)


def propagate(graph, P, workers=None):
    """Functional form of :meth:`Distributions.propagate`"""
    return _as_distributions(P).propagate(graph, workers=workers)


def conditional_update(graph, old, new, q, tol=1e-9):
    r"""Accept the new distribution of the nodes that differ from their neighbours

    Node i takes its row from **new** iff

    .. math::

        \sum_{j \in Nb(i)} isSubset(C^*_i, C^*_j) \leq q k_i

    where the maximum label sets :math:`C^*` are computed on **old** and
    Nb(i) includes i itself. Other nodes keep their row from **old**.

    :return: a tuple (distributions, numChange)
    """
    if not graph.has_selfloops():
        raise SelfloopError("the conditional update expects a graph with selfloops")
    old, new = _as_distributions(old), _as_distributions(new)
    if old.node_count != graph.node_count or new.node_count != graph.node_count:
        raise ValueError("distributions and graph differ in node count")

    M = old.max_label_matrix(tol)
    sizes = np.diff(M.indptr)
    rows = np.repeat(np.arange(graph.node_count), graph.degrees)
    cols = graph.indices
    shared = np.asarray(M[rows].multiply(M[cols]).sum(axis=1)).ravel()
    subset = (shared == sizes[rows]).astype(np.int64)
    similar = np.add.reduceat(subset, graph.indptr[:-1])
    accept = similar <= q * graph.degrees + _UPDATE_SLACK

    taken = sp.diags(accept.astype(np.float64)).dot(new._matrix)
    kept = sp.diags((~accept).astype(np.float64)).dot(old._matrix)
    merged = Distributions(taken + kept)
    return merged, int(accept.sum())


def count_max_label_changes(old, new, tol=1e-9):
    """Number of nodes whose set of maximum labels differs between old and new"""
    diff = old.max_label_matrix(tol) - new.max_label_matrix(tol)
    diff.eliminate_zeros()
    return int(np.count_nonzero(np.diff(diff.indptr)))


class StopTracker(object):
    """Count the repetitions of every numChange value

    ::

        >>> t = StopTracker(stop_frequency=5)
        >>> [t.record(x) for x in [7, 6, 5, 5, 5, 5, 5]]
        [False, False, False, False, False, False, True]

    """
    def __init__(self, stop_frequency=5):
        if stop_frequency < 1:
            raise ValueError("stop_frequency must be positive")
        self.stop_frequency = stop_frequency
        self.counts = Counter()
        self.history = []

    def record(self, num_change):
        """Store numChange; return True if the run must stop"""
        if num_change < 0:
            raise ValueError("numChange cannot be negative")
        self.history.append(num_change)
        self.counts[num_change] += 1
        return num_change == 0 or self.counts[num_change] >= self.stop_frequency

    def __len__(self):
        return len(self.history)


def record_and_check_stop(tracker, num_change, stop_frequency=None):
    """Functional form of :meth:`StopTracker.record`"""
    if stop_frequency is not None:
        tracker.stop_frequency = stop_frequency
    return tracker.record(num_change)


TraceRecord = namedtuple("TraceRecord", ["iteration", "num_change", "average_labels",
    "max_labels", "modularity"])


class IterationTrace(object):
    """Per-iteration records of a run

    Every record holds the iteration index, numChange, the average and the
    largest number of labels per node and, when requested, the modularity
    of the communities found at that iteration.
    """
    columns = list(TraceRecord._fields)

    def __init__(self):
        self.records = []

    def append(self, iteration, num_change, average_labels, max_labels, modularity=None):
        self.records.append(TraceRecord(iteration, num_change, average_labels,
            max_labels, modularity))

    def best(self):
        """Record with the largest modularity (None if Q was not traced)"""
        traced = [r for r in self.records if r.modularity is not None]
        if not traced:
            return None
        return max(traced, key=lambda r: r.modularity)

    def as_frame(self):
        return pd.DataFrame([r._asdict() for r in self.records], columns=self.columns)

    def as_list(self):
        return [r._asdict() for r in self.records]

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __getitem__(self, i):
        return self.records[i]

    def __eq__(self, other):
        if not isinstance(other, IterationTrace):
            return NotImplemented
        return self.records == other.records

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    __hash__ = None


class LabelRankResult(object):
    """Outcome of :func:`run_labelrank`

    Unpacks as ``distributions, partition, trace``. Other attributes:
    :attr:`iterations`, :attr:`converged` (False when max_iterations was
    reached), :attr:`initial_average_labels`, :attr:`duration` (seconds).
    """
    def __init__(self, distributions, partition, trace, iterations, converged,
            initial_average_labels, duration):
        self.distributions = distributions
        self.partition = partition
        self.trace = trace
        self.iterations = iterations
        self.converged = converged
        self.initial_average_labels = initial_average_labels
        self.duration = duration

    def _get_best(self):
        return self.trace.best()
    best = property(_get_best, doc="trace record with the best modularity, if traced")

    def _get_final_average_labels(self):
        return self.distributions.average_label_count()
    final_average_labels = property(_get_final_average_labels)

    def __iter__(self):
        return iter((self.distributions, self.partition, self.trace))

    def __repr__(self):
        return "LabelRankResult(communities=%s, iterations=%s, converged=%s)" % (
            self.partition.community_count, self.iterations, self.converged)


def labelrank_step(graph, P, params, workers=None):
    """One synchronous iteration; return (new distributions, numChange)"""
    tol = params.tie_tolerance
    candidate = P.propagate(graph, workers=workers).inflate(params.inflation)
    candidate = candidate.cutoff(params.cutoff, tol)
    if params.conditional_update:
        return conditional_update(graph, P, candidate, params.update_fraction, tol)
    return candidate, count_max_label_changes(P, candidate, tol)


def run_labelrank(graph, params=None, trace=False, workers=None):
    """Detect communities with LabelRank

    :param graph: a :class:`~labelrank.network.graph.Graph`; selfloops are
        added if missing
    :param params: a :class:`~labelrank.core.params.Params` (defaults if None)
    :param bool trace: compute the modularity of every iteration (one extra
        pass over the edges per iteration)
    :param int workers: number of workers (default: LABELRANK_THREADS)
    :return: a :class:`LabelRankResult`. The output does not depend on the
        number of workers.
    """
    params = params or Params()
    tol = params.tie_tolerance
    t1 = time.time()
    g = graph.add_selfloops()
    original = graph.remove_selfloops()

    P = Distributions.initial(g)
    initial_average = P.average_label_count()
    tracker = StopTracker(params.stop_frequency)
    history = IterationTrace()
    converged = False
    iteration = 0
    logger.info("LabelRank on %s nodes, %s edges with %s" % (g.node_count,
        original.edge_count, params))

    for iteration in range(1, params.max_iterations + 1):
        P, num_change = labelrank_step(g, P, params, workers=workers)
        Q = None
        if trace:
            Q = modularity(original, extract_communities(P, tol))
        history.append(iteration, num_change, P.average_label_count(),
            int(P.support_sizes.max()), Q)
        logger.debug("iteration %s: numChange=%s, labels/node=%.3f" % (iteration,
            num_change, P.average_label_count()))
        if tracker.record(num_change):
            converged = True
            break

    if converged:
        logger.info("Stopped after %s iterations" % iteration)
    else:
        logger.warning("No convergence after %s iterations" % params.max_iterations)

    partition = extract_communities(P, tol)
    return LabelRankResult(P, partition, history, iteration, converged,
        initial_average, time.time() - t1)


def extract_communities(P, tol=1e-9):
    """Group the nodes sharing the same highest probability label

    The community label of a node is the smallest of its maximum labels.

    :param P: :class:`Distributions` or a list of :class:`LabelDistribution`
    :return: a :class:`~labelrank.metrics.partition.Partition`
    """
    return Partition(_as_distributions(P).community_labels(tol))


def average_label_count(P):
    """Mean number of labels per node"""
    return _as_distributions(P).average_label_count()
