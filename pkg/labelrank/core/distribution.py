"""Label distribution of a single node and the operators acting on it

The engine (:mod:`labelrank.core.labelrank`) applies the same operators to
all the nodes at once; the functions here work on one node and are the
reference for a single row.
"""
import numpy as np

__all__ = ["LabelDistribution", "MaxLabelSet", "inflate", "cutoff", "max_labels"]

#: normalisation tolerance of a distribution
NORMALISATION_TOLERANCE = 1e-9


class MaxLabelSet(frozenset):
    """Set of labels reaching the maximum probability of a distribution"""
    def __new__(cls, labels):
        labels = frozenset(int(x) for x in labels)
        if not labels:
            raise ValueError("a set of maximum labels cannot be empty")
        return super(MaxLabelSet, cls).__new__(cls, labels)

    def __repr__(self):
        return "MaxLabelSet(%s)" % sorted(self)


class LabelDistribution(object):
    """Sparse probability vector over labels (node ids)

    Entries are kept sorted by decreasing probability, ties ordered by
    increasing label::

        >>> d = LabelDistribution.from_dict({3: 0.279, 1: 0.721})
        >>> d.labels.tolist(), d.probabilities.tolist()
        ([1, 3], [0.721, 0.279])

    :raises ValueError: empty support, duplicated labels, probabilities that
        are not strictly positive or do not sum to 1 (unless **normalise** is
        set, in which case the probabilities are rescaled)
    """
    def __init__(self, labels, probabilities, normalise=False):
        labels = np.asarray(labels, dtype=np.int64).ravel()
        probabilities = np.asarray(probabilities, dtype=np.float64).ravel()
        if len(labels) != len(probabilities):
            raise ValueError("labels and probabilities differ in length")
        if len(labels) == 0:
            raise ValueError("a label distribution cannot be empty")
        if len(np.unique(labels)) != len(labels):
            raise ValueError("duplicated labels in %s" % labels.tolist())
        if np.any(probabilities <= 0):
            raise ValueError("probabilities must be strictly positive")
        total = probabilities.sum()
        if normalise:
            probabilities = probabilities / total
        elif abs(total - 1) > NORMALISATION_TOLERANCE:
            raise ValueError("probabilities sum to %s instead of 1" % total)
        order = np.lexsort((labels, -probabilities))
        self._labels = labels[order]
        self._probabilities = probabilities[order]

    @classmethod
    def from_dict(cls, mapping, normalise=False):
        items = list(mapping.items())
        return cls([k for k, _ in items], [v for _, v in items], normalise=normalise)

    def _get_labels(self):
        return self._labels.copy()
    labels = property(_get_labels, doc="labels, by decreasing probability")

    def _get_probabilities(self):
        return self._probabilities.copy()
    probabilities = property(_get_probabilities)

    def as_dict(self):
        return dict(zip(self._labels.tolist(), self._probabilities.tolist()))

    def allclose(self, other, atol=NORMALISATION_TOLERANCE):
        """True if both distributions have the same support and close values"""
        if set(self._labels.tolist()) != set(other._labels.tolist()):
            return False
        mine, theirs = self.as_dict(), other.as_dict()
        return all(abs(mine[k] - theirs[k]) <= atol for k in mine)

    def __getitem__(self, label):
        hit = np.nonzero(self._labels == label)[0]
        return float(self._probabilities[hit[0]]) if len(hit) else 0.0

    def __len__(self):
        return len(self._labels)

    def __iter__(self):
        return iter(zip(self._labels.tolist(), self._probabilities.tolist()))

    def __repr__(self):
        body = ", ".join("%s: %.4g" % (k, v) for k, v in self)
        return "LabelDistribution({%s})" % body


def inflate(distribution, inflation):
    """Raise every probability to the power **inflation** and renormalise

    The support and the ordering are unchanged::

        >>> inflate(LabelDistribution([0, 1], [0.6, 0.4]), 2).probabilities
        array([0.69230769, 0.30769231])

    """
    if inflation < 1:
        raise ValueError("inflation must be >= 1. Provided %s" % inflation)
    if inflation == 1:
        return distribution
    powered = distribution.probabilities ** inflation
    return LabelDistribution(distribution.labels, powered / powered.sum())


def max_labels(distribution, tol=1e-9):
    """Labels whose probability is within **tol** of the maximum"""
    probabilities = distribution.probabilities
    keep = probabilities >= probabilities.max() - tol
    return MaxLabelSet(distribution.labels[keep])


def cutoff(distribution, r, tol=1e-9):
    """Remove the labels whose probability is below **r** and renormalise

    A label is kept when p >= r - tol. If every label falls below the
    threshold, the maximum labels are kept so that the distribution is
    never empty.
    """
    if not 0 <= r <= 1:
        raise ValueError("cutoff must be in [0, 1]. Provided %s" % r)
    probabilities = distribution.probabilities
    keep = probabilities >= r - tol
    if not keep.any():
        keep = probabilities >= probabilities.max() - tol
    if keep.all():
        return distribution
    kept = probabilities[keep]
    return LabelDistribution(distribution.labels[keep], kept / kept.sum())
