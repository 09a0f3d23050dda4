from labelrank import labelrank_data, labelrank_debug_level, logger
from labelrank.tools import worker_count, run_concurrently, row_chunks
import os
import pytest


def test_worker_count(monkeypatch):
    monkeypatch.setenv("LABELRANK_THREADS", "3")
    assert worker_count() == 3
    assert worker_count(2) == 2
    monkeypatch.setenv("LABELRANK_THREADS", "0")
    assert worker_count() == (os.cpu_count() or 1)
    monkeypatch.delenv("LABELRANK_THREADS")
    assert worker_count() == (os.cpu_count() or 1)

    monkeypatch.setenv("LABELRANK_THREADS", "many")
    with pytest.raises(ValueError):
        worker_count()
    with pytest.raises(ValueError):
        worker_count(-1)


def test_run_concurrently():
    items = list(range(50))
    assert run_concurrently(lambda x: x * x, items, workers=4) == [x * x for x in items]
    assert run_concurrently(lambda x: x, [], workers=4) == []


def test_row_chunks():
    assert row_chunks(10, 3) == [(0, 3), (3, 6), (6, 10)]
    assert row_chunks(2, 8) == [(0, 1), (1, 2)]
    assert row_chunks(5, 1) == [(0, 5)]


def test_debug_level():
    labelrank_debug_level("DEBUG")
    assert logger.level == 10
    labelrank_debug_level("WARNING")
    with pytest.raises(ValueError):
        labelrank_debug_level("VERBOSE")


def test_data():
    assert labelrank_data("karate.txt").endswith("karate.txt")
    with pytest.raises(IOError):
        labelrank_data("dummy.txt")
