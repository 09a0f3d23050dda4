"""Synthetic graphs used by the scaling benchmark and the tests"""
import numpy as np

from labelrank.network.graph import Graph

__all__ = ["GraphBenchmark", "random_graph", "planted_partition", "ring_of_cliques"]


def _unique_pairs(u, v, n):
    # canonical (min, max) pairs without loops, first occurrence order kept
    keep = u != v
    u, v = u[keep], v[keep]
    a, b = np.minimum(u, v), np.maximum(u, v)
    _, first = np.unique(a * n + b, return_index=True)
    first.sort()
    return a[first], b[first]


def random_graph(n, m, seed=0):
    """Erdos-Renyi like graph with exactly m edges drawn uniformly

    :param int n: number of nodes
    :param int m: number of edges, at most n(n-1)/2
    :param int seed: seed of the numpy random generator
    """
    if m > n * (n - 1) // 2:
        raise ValueError("cannot draw %s edges on %s nodes" % (m, n))
    rng = np.random.default_rng(seed)
    u = np.empty(0, dtype=np.int64)
    v = np.empty(0, dtype=np.int64)
    while len(u) < m:
        draw = max(int(1.2 * (m - len(u))), 16)
        u, v = _unique_pairs(np.concatenate([u, rng.integers(0, n, draw)]),
                             np.concatenate([v, rng.integers(0, n, draw)]), n)
    return Graph.from_edges(np.column_stack([u[:m], v[:m]]), node_count=n)


def planted_partition(groups, size, p_in, p_out, seed=0):
    """Graph with planted communities of equal size

    Nodes of community c are ``c*size ... (c+1)*size - 1``. Pairs inside a
    community are linked with probability p_in, other pairs with p_out.

    :return: a tuple (graph, membership array)
    """
    rng = np.random.default_rng(seed)
    n = groups * size
    membership = np.repeat(np.arange(groups), size)
    i, j = np.triu_indices(n, k=1)
    same = membership[i] == membership[j]
    prob = np.where(same, p_in, p_out)
    keep = rng.random(len(i)) < prob
    return Graph.from_edges(np.column_stack([i[keep], j[keep]]), node_count=n), membership


def ring_of_cliques(cliques, size):
    """Cliques of the given size, consecutive cliques joined by one edge"""
    edges = []
    for c in range(cliques):
        start = c * size
        for a in range(start, start + size):
            for b in range(a + 1, start + size):
                edges.append((a, b))
        if cliques > 1:
            edges.append((start + size - 1, ((c + 1) % cliques) * size))
    return Graph.from_edges(edges, node_count=cliques * size)


class GraphBenchmark(object):
    """Create random graphs of increasing size for timing purposes

    ::

        b = GraphBenchmark(average_degree=8)
        graphs = b.create_graphs([10000, 20000, 40000])

    """
    def __init__(self, average_degree=8, seed=0):
        self.average_degree = average_degree
        self.seed = seed

    def create_graph(self, m):
        """Random graph with m edges and about 2m/average_degree nodes"""
        n = max(int(2 * m / self.average_degree), 10)
        return random_graph(n, int(m), seed=self.seed)

    def create_graphs(self, sizes):
        return [self.create_graph(m) for m in sizes]
