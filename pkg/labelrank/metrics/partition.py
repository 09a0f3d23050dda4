"""Hard partitions of the nodes of a graph"""
import numpy as np
import pandas as pd

from labelrank.errors import PartitionError

__all__ = ["Partition"]


class Partition(object):
    """Assignment of every node to exactly one community

    Community identifiers are canonical: a community is named after its
    smallest member, so that two partitions grouping nodes the same way
    compare equal whatever labels were used to build them::

        >>> p = Partition([7, 7, 3, 3, 7])
        >>> p.assignment.tolist()
        [0, 0, 2, 2, 0]
        >>> p == Partition(["a", "a", "b", "b", "a"])
        True

    """
    def __init__(self, labels):
        """.. rubric:: constructor

        :param labels: one (hashable) community label per node
        """
        labels = np.asarray(labels)
        if labels.ndim != 1:
            raise PartitionError("expected one label per node")
        if len(labels):
            _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
            canonical = first[inverse.ravel()]
        else:
            canonical = np.empty(0, dtype=np.int64)
        self._assignment = canonical.astype(np.int64)
        self._assignment.setflags(write=False)

    @classmethod
    def from_mapping(cls, names, mapping):
        """Build a partition from a dictionary keyed by external node ids

        :param names: external ids of the nodes, in dense id order
        :param dict mapping: external id -> community label
        :raises PartitionError: if a node is missing or an unknown node is given
        """
        missing = [x for x in names if x not in mapping]
        if missing:
            raise PartitionError("%s nodes without community (e.g. %s)" % (len(missing),
                missing[0]))
        known = set(names)
        extra = [x for x in mapping if x not in known]
        if extra:
            raise PartitionError("%s unknown nodes in the partition (e.g. %s)"
                % (len(extra), extra[0]))
        return cls([str(mapping[x]) for x in names])

    def _get_assignment(self):
        return self._assignment
    assignment = property(_get_assignment,
        doc="canonical community id (smallest member) of every node")

    def _get_communities(self):
        communities = {}
        for node, community in enumerate(self._assignment.tolist()):
            communities.setdefault(community, []).append(node)
        return dict((k, communities[k]) for k in sorted(communities))
    communities = property(_get_communities,
        doc="dictionary community id -> sorted list of members")

    def _get_community_count(self):
        return len(np.unique(self._assignment))
    community_count = property(_get_community_count)

    def canonical(self):
        """Tuple of community ids, suitable as a dictionary key"""
        return tuple(self._assignment.tolist())

    def as_frame(self, names=None):
        """Return a pandas DataFrame with columns node and community"""
        nodes = list(range(len(self))) if names is None else list(names)
        communities = [nodes[c] for c in self._assignment]
        return pd.DataFrame({"node": nodes, "community": communities},
            columns=["node", "community"])

    def __len__(self):
        return len(self._assignment)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return np.array_equal(self._assignment, other._assignment)

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return "Partition(nodes=%s, communities=%s)" % (len(self), self.community_count)
