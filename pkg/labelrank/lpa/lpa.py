# -*- python -*-
#
#  This file is part of labelrank software
#
#  Distributed under the terms of the 3-clause BSD license.
#
##############################################################################
"""Synchronous label propagation (LPA), the randomised baseline

Every node starts with its own label. At each iteration all the nodes
simultaneously adopt the label carried by most of their neighbours (their
own label is not counted), ties being broken uniformly at random with a
seeded generator. The same seed always gives the same partition; different
seeds may not::

    >>> from labelrank import labelrank_data, load_edge_list
    >>> from labelrank.lpa import run_lpa, lpa_stability_report
    >>> g = load_edge_list(labelrank_data("karate.txt"))
    >>> res = run_lpa(g, seed=42)
    >>> report = lpa_stability_report(g, range(10))
    >>> report.table

"""
from collections import Counter

import numpy as np
import pandas as pd
from easydev import AttrDict

from labelrank import logger
from labelrank.metrics.modularity import modularity
from labelrank.metrics.partition import Partition
from labelrank.tools import run_concurrently

__all__ = ["LpaState", "run_lpa", "lpa_stability_report"]


class LpaState(object):
    """Labels of the nodes during a LPA run

    :attr:`labels` holds exactly one label per node, :attr:`rng_seed` the
    seed of the generator and :attr:`iteration` the number of synchronous
    updates performed so far.
    """
    def __init__(self, node_count, rng_seed=None):
        self.labels = np.arange(node_count, dtype=np.int64)
        self.rng_seed = rng_seed
        self.iteration = 0
        self._rng = np.random.default_rng(rng_seed)

    def step(self, graph):
        """One synchronous update; return (changed nodes, random draws used)"""
        old = self.labels
        new = old.copy()
        indptr, indices = graph.indptr, graph.indices
        draws = 0
        for i in range(graph.node_count):
            around = old[indices[indptr[i]:indptr[i+1]]]
            if len(around) == 0:
                continue
            counts = Counter(around.tolist())
            best = max(counts.values())
            candidates = sorted(label for label, c in counts.items() if c == best)
            if len(candidates) == 1:
                new[i] = candidates[0]
            else:
                new[i] = candidates[self._rng.integers(len(candidates))]
                draws += 1
        self.labels = new
        self.iteration += 1
        return int(np.count_nonzero(new != old)), draws


def run_lpa(graph, seed=None, max_iterations=100):
    """Synchronous LPA on the graph without selfloops

    :param graph: a :class:`~labelrank.network.graph.Graph`; selfloops are
        ignored
    :param int seed: seed of the tie-breaking generator
    :param int max_iterations: synchronous LPA may oscillate, the run stops
        there in any case
    :return: a dictionary (AttrDict) with **partition**, **iterations**,
        **converged** (no label changed during the last iteration) and
        **oscillating** (a deterministic period-2 cycle was detected)
    """
    if max_iterations < 1:
        raise ValueError("max_iterations must be positive")
    if graph.selfloop_count:
        logger.info("LPA ignores the %s selfloops of the graph" % graph.selfloop_count)
        graph = graph.remove_selfloops()

    state = LpaState(graph.node_count, rng_seed=seed)
    converged = oscillating = False
    previous, previous_draws = None, None
    while state.iteration < max_iterations:
        before = state.labels
        changed, draws = state.step(graph)
        if changed == 0:
            converged = True
            break
        # same labels as two steps ago without any random choice: a cycle
        if previous is not None and draws == 0 and previous_draws == 0 and \
                np.array_equal(state.labels, previous):
            oscillating = True
            break
        previous, previous_draws = before, draws

    if oscillating:
        logger.warning("LPA (seed %s) oscillates between two states" % seed)
    elif not converged:
        logger.warning("LPA (seed %s) did not converge in %s iterations" % (seed,
            max_iterations))
    return AttrDict(partition=Partition(state.labels), iterations=state.iteration,
        converged=converged, oscillating=oscillating, state=state)


def lpa_stability_report(graph, seeds, max_iterations=100, workers=None):
    """Run LPA with several seeds and count the distinct partitions

    :param seeds: at least two seeds
    :return: a dictionary (AttrDict) with

        * **distinct**: number of different partitions (up to relabeling)
        * **table**: pandas DataFrame, one row per seed (seed, communities,
          modularity, iterations, converged)
        * **partitions**: the partition of every seed
        * **min**, **max**, **mean** modularity and **best_seed**
    """
    seeds = list(seeds)
    if len(seeds) < 2:
        raise ValueError("a stability report needs at least 2 seeds")
    original = graph.remove_selfloops()
    runs = run_concurrently(lambda s: run_lpa(original, seed=s,
        max_iterations=max_iterations), seeds, workers=workers)

    partitions = [r.partition for r in runs]
    scores = [modularity(original, p) for p in partitions]
    table = pd.DataFrame({
        "seed": seeds,
        "communities": [p.community_count for p in partitions],
        "modularity": scores,
        "iterations": [r.iterations for r in runs],
        "converged": [r.converged for r in runs]},
        columns=["seed", "communities", "modularity", "iterations", "converged"])
    distinct = len(set(p.canonical() for p in partitions))
    best = int(np.argmax(scores))
    logger.info("LPA: %s distinct partitions over %s seeds" % (distinct, len(seeds)))
    return AttrDict(distinct=distinct, table=table, partitions=partitions,
        min=float(np.min(scores)), max=float(np.max(scores)),
        mean=float(np.mean(scores)), best_seed=seeds[best])
