from labelrank.core import Params
from easydev import TempFile
import pytest


def test_defaults():
    p = Params()
    assert p.inflation == 2.0
    assert p.cutoff == 0.1
    assert p.update_fraction == 0.6
    assert p.stop_frequency == 5
    assert p.max_iterations == 1000
    assert p.tie_tolerance == 1e-9
    assert p.conditional_update is True
    assert p == Params.from_dict(p.as_dict())
    assert p != p.copy(inflation=1.5)


def test_validation():
    for kargs in [{"inflation": 0.5}, {"cutoff": 1.5}, {"cutoff": -0.1},
            {"update_fraction": 2}, {"stop_frequency": 0}, {"max_iterations": 2.5},
            {"conditional_update": "yes"}, {"tie_tolerance": -1}]:
        with pytest.raises(ValueError):
            Params(**kargs)

    p = Params()
    try:
        p.inflation = 0
        assert False
    except ValueError:
        assert p.inflation == 2.0

    with pytest.raises(ValueError):
        Params.from_dict({"inflations": 2})


def test_yaml():
    with TempFile(suffix=".yaml") as fout:
        with open(fout.name, "w") as fh:
            fh.write("inflation: 1.5\nupdate_fraction: 0.5\nconditional_update: false\n")
        p = Params.from_yaml(fout.name)
        assert p.inflation == 1.5
        assert p.update_fraction == 0.5
        assert p.conditional_update is False
        assert p.cutoff == 0.1

    with TempFile(suffix=".yaml") as fout:
        with open(fout.name, "w") as fh:
            fh.write("- 1\n- 2\n")
        with pytest.raises(ValueError):
            Params.from_yaml(fout.name)
