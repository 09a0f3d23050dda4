from labelrank.core import LabelDistribution, MaxLabelSet, inflate, cutoff, max_labels
import numpy as np
import pytest


def test_distribution():
    d = LabelDistribution.from_dict({3: 0.279, 1: 0.721})
    assert d.labels.tolist() == [1, 3]
    assert d[3] == 0.279
    assert d[7] == 0.0
    assert len(d) == 2
    assert dict(d) == {1: 0.721, 3: 0.279}

    # ties ordered by label
    d = LabelDistribution([5, 2], [0.5, 0.5])
    assert d.labels.tolist() == [2, 5]

    d = LabelDistribution([0, 1], [2, 6], normalise=True)
    assert d.as_dict() == {0: 0.25, 1: 0.75}


def test_distribution_errors():
    for labels, probs in [([], []), ([0, 0], [0.5, 0.5]), ([0, 1], [1., 0.]),
            ([0, 1], [0.6, 0.6]), ([0], [0.5, 0.5])]:
        with pytest.raises(ValueError):
            LabelDistribution(labels, probs)
    with pytest.raises(ValueError):
        MaxLabelSet([])


def test_inflate():
    d = inflate(LabelDistribution([0, 1], [0.6, 0.4]), 2)
    assert abs(d[0] - 0.6923) < 5e-5
    assert abs(d[1] - 0.3077) < 5e-5

    d = inflate(LabelDistribution([0, 1, 2], [0.5, 0.3, 0.2]), 2)
    assert np.allclose(d.probabilities, [0.25 / 0.38, 0.09 / 0.38, 0.04 / 0.38])
    assert np.allclose(d.probabilities, [0.6579, 0.2368, 0.1053], atol=1e-4)

    d = LabelDistribution([4, 1, 2], [0.5, 0.3, 0.2])
    assert inflate(d, 1) is d

    for inflation in [1.1, 2, 5]:
        assert inflate(LabelDistribution([0, 1], [0.55, 0.45]), inflation)[0] > 0.55

    with pytest.raises(ValueError):
        inflate(d, 0.5)


def test_inflate_properties():
    rng = np.random.default_rng(0)
    for _ in range(200):
        size = rng.integers(1, 8)
        d = LabelDistribution(rng.permutation(20)[:size], rng.random(size) + 1e-3,
            normalise=True)
        e = inflate(d, rng.uniform(1, 3))
        assert abs(e.probabilities.sum() - 1) < 1e-9
        assert set(e.labels.tolist()) == set(d.labels.tolist())
        # order preserved
        values = [e[label] for label in d.labels.tolist()]
        assert np.all(np.diff(values) <= 1e-12)


def test_cutoff():
    d = cutoff(LabelDistribution([0, 1, 2], [0.7, 0.25, 0.05]), 0.1)
    assert d.labels.tolist() == [0, 1]
    assert np.allclose(d.probabilities, [0.7368, 0.2632], atol=1e-4)

    d = LabelDistribution([0, 1, 2], [0.7, 0.25, 0.05])
    assert cutoff(d, 0) is d

    # every label below the threshold: the maximum labels survive
    d = LabelDistribution(range(20), [0.05] * 20)
    e = cutoff(d, 0.1)
    assert len(e) == 20
    assert np.allclose(e.probabilities, 0.05)

    d = LabelDistribution(range(12), [0.12] + [0.08] * 11, normalise=True)
    e = cutoff(d, 0.5)
    assert e.labels.tolist() == [0]
    assert e.probabilities.tolist() == [1.0]

    # p >= r - tol is kept
    d = LabelDistribution([0, 1, 2], [0.6, 0.3, 0.1], normalise=True)
    assert len(cutoff(d, 0.1 + 1e-12)) == 3
    assert cutoff(d, 0.1 + 1e-12, tol=0).labels.tolist() == [0, 1]

    with pytest.raises(ValueError):
        cutoff(d, 2)


def test_cutoff_properties():
    rng = np.random.default_rng(1)
    for _ in range(200):
        size = rng.integers(1, 10)
        d = LabelDistribution(np.arange(size), rng.random(size) + 1e-3, normalise=True)
        e = cutoff(d, rng.uniform(0, 0.5))
        assert 1 <= len(e) <= len(d)
        assert set(e.labels.tolist()) <= set(d.labels.tolist())
        assert abs(e.probabilities.sum() - 1) < 1e-9


def test_max_labels():
    assert max_labels(LabelDistribution([0, 1], [0.5, 0.5])) == {0, 1}
    assert max_labels(LabelDistribution([0, 1], [0.721, 0.279])) == {0}
    d = LabelDistribution([0, 1], [0.5 + 1e-10, 0.5 - 1e-10])
    assert max_labels(d, tol=1e-9) == {0, 1}
    assert max_labels(d, tol=0) == {0}
    assert isinstance(max_labels(d), MaxLabelSet)
