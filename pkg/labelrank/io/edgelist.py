"""Edge-list and partition files

Edge lists follow the SNAP convention: one edge per line made of two
whitespace-separated node tokens, lines starting with ``#`` being comments::

    # Undirected graph
    1 2
    2 3
    3 1

Partition (ground-truth or result) files use the same two-column layout,
``node community``, with an optional ``node community`` header line.
"""
import io
import os
from collections import OrderedDict

from labelrank import logger
from labelrank.errors import GraphFormatError, EmptyGraphError
from labelrank.network.graph import Graph

__all__ = ["load_edge_list", "write_edge_list", "load_partition", "write_partition"]


def _open(source):
    if isinstance(source, (str, bytes, os.PathLike)):
        return io.open(source, "r", encoding="utf-8"), True
    return source, False


def _iter_tokens(source, comment_prefix, separator):
    stream, close = _open(source)
    try:
        for lineno, line in enumerate(stream, 1):
            line = line.strip()
            if not line or (comment_prefix and line.startswith(comment_prefix)):
                continue
            tokens = [x.strip() for x in line.split(separator)]
            tokens = [x for x in tokens if x]
            yield lineno, tokens
    finally:
        if close:
            stream.close()


def _dense_ids(names):
    # integer ids are ordered numerically, anything else as strings
    try:
        return sorted(names, key=int)
    except ValueError:
        return sorted(names)


def load_edge_list(source, comment_prefix="#", separator=None):
    """Read an undirected, unweighted graph from an edge list

    :param source: a filename or a text stream
    :param str comment_prefix: lines starting with this prefix are ignored
    :param str separator: token separator (default: any whitespace)
    :return: a :class:`~labelrank.network.graph.Graph`. Duplicated edges are
        collapsed and direction is ignored. Selfloops found in the file are
        kept but none is added.
    :raises GraphFormatError: a line does not hold exactly two tokens (a
        third weight column is rejected)
    :raises EmptyGraphError: no edge found

    ::

        >>> from io import StringIO
        >>> g = load_edge_list(StringIO("1 2\\n2 1\\n# note\\n1 2"))
        >>> g.node_count, g.edge_count
        (2, 1)

    """
    pairs = []
    seen = OrderedDict()
    for lineno, tokens in _iter_tokens(source, comment_prefix, separator):
        if len(tokens) == 3:
            raise GraphFormatError("weighted edges are not supported (found %s)"
                % " ".join(tokens), lineno=lineno)
        if len(tokens) != 2:
            raise GraphFormatError("expected 2 node tokens, found %s" % len(tokens),
                lineno=lineno)
        for token in tokens:
            seen.setdefault(token, None)
        pairs.append(tokens)

    if not pairs:
        raise EmptyGraphError("no edge found in the input")

    names = _dense_ids(list(seen.keys()))
    index = dict((name, i) for i, name in enumerate(names))
    edges = [(index[a], index[b]) for a, b in pairs]
    graph = Graph.from_edges(edges, node_count=len(names), names=names)
    logger.info("Loaded %s nodes and %s edges (%s lines)" % (graph.node_count,
        graph.edge_count, len(pairs)))
    return graph


def write_edge_list(graph, target, separator=" "):
    """Write every undirected edge once, with the original node ids

    :param graph: a :class:`~labelrank.network.graph.Graph`
    :param target: a filename or a writable text stream
    """
    names = graph.names
    lines = ["%s%s%s\n" % (names[i], separator, names[j]) for i, j in graph.edges()]
    if isinstance(target, (str, os.PathLike)):
        with io.open(target, "w", encoding="utf-8") as fout:
            fout.writelines(lines)
    else:
        target.writelines(lines)


def load_partition(source, comment_prefix="#", separator=None):
    """Read a two-column ``node community`` file

    :return: an ordered dictionary mapping node ids to community ids (both
        as strings)
    """
    mapping = OrderedDict()
    first = True
    for lineno, tokens in _iter_tokens(source, comment_prefix, separator):
        if first and tokens == ["node", "community"]:
            first = False
            continue
        first = False
        if len(tokens) != 2:
            raise GraphFormatError("expected node and community, found %s tokens"
                % len(tokens), lineno=lineno)
        node, community = tokens
        if node in mapping:
            raise GraphFormatError("node %s assigned twice" % node, lineno=lineno)
        mapping[node] = community
    if not mapping:
        raise EmptyGraphError("no assignment found in the input")
    return mapping


def write_partition(partition, names, target, separator="\t"):
    """Write a partition as a header line followed by ``node community`` rows

    Communities are written with the original id of their canonical
    (smallest) member.
    """
    assignment = partition.assignment
    lines = ["node%scommunity\n" % separator]
    lines += ["%s%s%s\n" % (names[i], separator, names[c]) for i, c in enumerate(assignment)]
    if isinstance(target, (str, os.PathLike)):
        with io.open(target, "w", encoding="utf-8") as fout:
            fout.writelines(lines)
    else:
        target.writelines(lines)
