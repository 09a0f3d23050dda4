"""Dense n x n formulation of LabelRank

Straight transcription of the matrix form ``A x P`` followed by inflation,
cutoff and conditional update on full numpy arrays. Memory is quadratic in
the number of nodes, so this is meant for small graphs and for checking the
sparse engine of :mod:`labelrank.core.labelrank`.
"""
import time

import numpy as np

from labelrank import logger
from labelrank.core.labelrank import (Distributions, IterationTrace, LabelRankResult,
    StopTracker, extract_communities)
from labelrank.core.params import Params

__all__ = ["dense_initial", "dense_iteration", "run_labelrank_dense"]

_UPDATE_SLACK = 1e-9


def _normalise(P):
    return P / P.sum(axis=1, keepdims=True)


def dense_initial(graph):
    """Adjacency with selfloops and initial P, both as dense arrays"""
    A = graph.add_selfloops().to_scipy().toarray()
    return A, _normalise(A.copy())


def _max_labels(P, tol):
    return (P > 0) & (P >= P.max(axis=1, keepdims=True) - tol)


def dense_iteration(A, P, params):
    """One iteration on dense arrays; return (P, numChange)"""
    tol = params.tie_tolerance
    k = A.sum(axis=1)

    candidate = _normalise(A.dot(P) / k[:, None])
    if params.inflation != 1:
        candidate = _normalise(candidate ** params.inflation)

    keep = (candidate > 0) & (candidate >= params.cutoff - tol)
    empty = ~keep.any(axis=1)
    keep[empty] = _max_labels(candidate, tol)[empty]
    candidate = _normalise(np.where(keep, candidate, 0.))

    if not params.conditional_update:
        changed = np.any(_max_labels(P, tol) != _max_labels(candidate, tol), axis=1)
        return candidate, int(changed.sum())

    C = _max_labels(P, tol).astype(np.int64)
    shared = C.dot(C.T)
    subset = shared == C.sum(axis=1)[:, None]
    similar = (A * subset).sum(axis=1)
    accept = similar <= params.update_fraction * k + _UPDATE_SLACK
    return np.where(accept[:, None], candidate, P), int(accept.sum())


def run_labelrank_dense(graph, params=None):
    """LabelRank with dense arrays (same stop criterion as the sparse engine)"""
    params = params or Params()
    t1 = time.time()
    if graph.node_count > 5000:
        logger.warning("dense LabelRank on %s nodes needs %s MB" % (graph.node_count,
            graph.node_count ** 2 * 8 // 2 ** 20))
    A, P = dense_initial(graph)
    initial_average = float(np.count_nonzero(P)) / len(P)
    tracker = StopTracker(params.stop_frequency)
    history = IterationTrace()
    converged = False
    iteration = 0
    for iteration in range(1, params.max_iterations + 1):
        P, num_change = dense_iteration(A, P, params)
        support = np.count_nonzero(P, axis=1)
        history.append(iteration, num_change, float(support.mean()), int(support.max()))
        if tracker.record(num_change):
            converged = True
            break
    distributions = Distributions.from_dense(P)
    partition = extract_communities(distributions, params.tie_tolerance)
    return LabelRankResult(distributions, partition, history, iteration, converged,
        initial_average, time.time() - t1)
