from labelrank import Graph, labelrank_data, load_edge_list
from labelrank.io import load_partition
from labelrank.metrics import Partition, modularity, modularity_naive, compare_partitions
from labelrank.errors import PartitionError
from labelrank.network import random_graph
import numpy as np
import pytest


def test_triangle():
    g = Graph.from_edges([(0, 1), (1, 2), (2, 0)])
    assert modularity(g, Partition([0, 1, 2])) == pytest.approx(-1 / 3.)
    assert abs(modularity(g, Partition([0, 0, 0]))) < 1e-12
    # selfloops are ignored
    assert modularity(g.add_selfloops(), Partition([0, 1, 2])) == pytest.approx(-1 / 3.)


def test_oracle():
    rng = np.random.default_rng(11)
    for seed in range(50):
        n = int(rng.integers(2, 31))
        m = int(rng.integers(1, n * (n - 1) // 2 + 1))
        g = random_graph(n, m, seed=seed)
        p = Partition(rng.integers(0, 4, n))
        assert abs(modularity(g, p) - modularity_naive(g, p)) < 1e-9
        assert abs(modularity(g, Partition(np.zeros(n)))) < 1e-12
        # relabeling does not change Q
        relabeled = Partition([x * 7 + 3 for x in p.assignment.tolist()])
        assert modularity(g, relabeled) == modularity(g, p)
        assert -0.5 <= modularity(g, p) < 1


def test_karate():
    g = load_edge_list(labelrank_data("karate.txt"))
    truth = Partition.from_mapping(g.names, load_partition(labelrank_data("karate_truth.txt")))
    assert truth.community_count == 2
    assert modularity(g, truth) == pytest.approx(0.37, abs=0.01)


def test_no_edge():
    g = Graph.from_edges([(0, 0), (1, 1)])
    assert modularity(g, Partition([0, 1])) == 0.0
    assert modularity_naive(g, Partition([0, 1])) == 0.0


def test_errors():
    g = Graph.from_edges([(0, 1), (1, 2)])
    with pytest.raises(PartitionError):
        modularity(g, Partition([0, 0]))
    with pytest.raises(PartitionError):
        compare_partitions(Partition([0, 0]), Partition([0, 0, 1]))


def test_compare_partitions():
    p = Partition([0, 0, 0, 1, 1, 1])
    res = compare_partitions(p, p)
    assert res.identical is True
    assert res.agreement == 1.0
    assert compare_partitions(p, Partition(list("aaabbb"))).identical

    res = compare_partitions(Partition([0, 1, 2, 3]), Partition([0, 0, 0, 0]))
    assert res.identical is False
    assert res.agreement == 0.0

    rng = np.random.default_rng(2)
    for _ in range(20):
        a = Partition(rng.integers(0, 3, 12))
        b = Partition(rng.integers(0, 3, 12))
        assert compare_partitions(a, b).agreement == compare_partitions(b, a).agreement
        assert 0 <= compare_partitions(a, b).agreement <= 1

    # one pair out of three differs
    assert compare_partitions(Partition([0, 0, 1]),
        Partition([0, 1, 2])).agreement == pytest.approx(2 / 3.)
    assert compare_partitions(Partition([5]), Partition([2])).agreement == 1.0
