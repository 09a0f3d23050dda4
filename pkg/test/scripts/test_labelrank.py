from labelrank.scripts import labelrank
from labelrank import labelrank_data
from labelrank.io import load_partition
from easydev import TempFile
from io import StringIO
import json
import os
import pytest

prog = "labelrank"

football = pytest.mark.skipif(not os.path.exists(os.sep.join([os.path.dirname(
    labelrank_data("karate.txt")), "football.txt"])),
    reason="football.txt not found in the data directory")


def two_triangles(filename):
    with open(filename, "w") as fout:
        fout.write("# two triangles\na b\nb c\nc a\nd e\ne f\nf d\n")


def test_help():
    try:
        labelrank.main([prog, '--help'])
        assert False
    except SystemExit:
        pass
    else:
        raise Exception


def test_options():
    parser = labelrank.Options(prog=prog)
    for command in ["detect", "sweep", "bench", "stability"]:
        options = parser.parse_args([command, "graph.txt"])
        assert options.command == command
        assert options.format == "tsv"
    options = parser.parse_args(["detect", "graph.txt", "--q", "0.7", "--format", "json"])
    assert options.q == 0.7
    assert options.format == "json"


def test_usage_errors():
    assert labelrank.main([prog]) == 1
    assert labelrank.main([prog, "detect"]) == 1
    assert labelrank.main([prog, "detect", "dummy.txt", "--format", "xml"]) == 1
    karate = labelrank_data("karate.txt")
    assert labelrank.main([prog, "detect", karate, "--q", "1.5"]) == 1
    assert labelrank.main([prog, "detect", karate, "--inflation", "0.5"]) == 1
    assert labelrank.main([prog, "detect", "missing_file.txt"]) == 1


def test_detect(capsys):
    with TempFile(suffix=".txt") as infile:
        two_triangles(infile.name)
        assert labelrank.main([prog, "detect", infile.name, "-l", "ERROR"]) == 0
        out = capsys.readouterr().out
        assert dict(load_partition(StringIO(out))) == {"a": "a", "b": "a", "c": "a",
            "d": "d", "e": "d", "f": "d"}

        assert labelrank.main([prog, "detect", infile.name, "--format", "json",
            "--trace", "-l", "ERROR"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["summary"]["communities"] == 2
        assert data["summary"]["nodes"] == 6
        assert data["summary"]["edges"] == 6
        assert data["summary"]["modularity"] == pytest.approx(0.5)
        assert data["summary"]["converged"] is True
        assert len(data["trace"]) == data["summary"]["iterations"]
        assert "wall_time" not in data["summary"]

        assert labelrank.main([prog, "detect", infile.name, "--format", "json",
            "--timing", "-l", "ERROR"]) == 0
        assert "wall_time" in json.loads(capsys.readouterr().out)["summary"]


def test_detect_empty(capsys):
    with TempFile(suffix=".txt") as infile:
        with open(infile.name, "w") as fout:
            fout.write("# nothing here\n")
        assert labelrank.main([prog, "detect", infile.name, "-l", "CRITICAL"]) == 1

    with TempFile(suffix=".txt") as infile:
        with open(infile.name, "w") as fout:
            fout.write("1 2 0.5\n")
        assert labelrank.main([prog, "detect", infile.name, "-l", "CRITICAL"]) == 1


def test_detect_output():
    karate = labelrank_data("karate.txt")
    with TempFile(suffix=".json") as out1, TempFile(suffix=".json") as out2:
        for outfile in [out1, out2]:
            assert labelrank.main([prog, "detect", karate, "--algorithm", "lpa",
                "--seed", "42", "--format", "json", "--output", outfile.name,
                "-l", "ERROR"]) == 0
        with open(out1.name) as fin1, open(out2.name) as fin2:
            text = fin1.read()
            assert text == fin2.read()
        data = json.loads(text)
        assert data["summary"]["algorithm"] == "lpa"
        assert data["summary"]["settings"]["seed"] == 42
        assert len(data["assignment"]) == 34


def test_detect_formats_agree():
    karate = labelrank_data("karate.txt")
    with TempFile(suffix=".json") as jfile, TempFile(suffix=".tsv") as tfile:
        assert labelrank.main([prog, "detect", karate, "--format", "json",
            "--output", jfile.name, "-l", "ERROR"]) == 0
        assert labelrank.main([prog, "detect", karate, "--format", "tsv",
            "--output", tfile.name, "-l", "ERROR"]) == 0
        with open(jfile.name) as fin:
            assignment = json.load(fin)["assignment"]
        assert dict(load_partition(tfile.name)) == assignment


def test_detect_truth(capsys):
    karate = labelrank_data("karate.txt")
    truth = labelrank_data("karate_truth.txt")
    assert labelrank.main([prog, "detect", karate, "--truth", truth, "--format",
        "json", "-l", "ERROR"]) == 0
    summary = json.loads(capsys.readouterr().out)["summary"]
    assert 0 <= summary["truth_agreement"] <= 1
    assert summary["settings"]["inflation"] == 2.0


def test_config(capsys):
    karate = labelrank_data("karate.txt")
    with TempFile(suffix=".yaml") as config:
        with open(config.name, "w") as fout:
            fout.write("inflation: 1.5\nupdate_fraction: 0.5\n")
        assert labelrank.main([prog, "detect", karate, "--config", config.name,
            "--q", "0.6", "--no-conditional-update", "--format", "json",
            "-l", "ERROR"]) == 0
        settings = json.loads(capsys.readouterr().out)["summary"]["settings"]
        assert settings["inflation"] == 1.5
        assert settings["update_fraction"] == 0.6
        assert settings["conditional_update"] is False


def test_sweep(capsys):
    with TempFile(suffix=".txt") as infile:
        two_triangles(infile.name)
        assert labelrank.main([prog, "sweep", infile.name, "-l", "ERROR"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].split("\t") == ["inflation", "q", "modularity", "communities",
            "iterations", "converged", "best"]
        assert len(lines) == 7

        config = labelrank.RunConfig(input=infile.name)
        table = labelrank.cmd_sweep(config, [1, 2], [0.5, 0.6, 0.7])
        assert table["inflation"].tolist() == [1, 1, 1, 2, 2, 2]
        assert table["q"].tolist() == [0.5, 0.6, 0.7] * 2
        assert table["modularity"].nunique() == 1
        assert table["best"].tolist() == [True] + [False] * 5
        capsys.readouterr()

        assert labelrank.main([prog, "sweep", infile.name, "--format", "json",
            "-l", "ERROR"]) == 0
        rows = json.loads(capsys.readouterr().out)["rows"]
        assert len(rows) == 6
        assert sum(row["best"] for row in rows) == 1


def test_sweep_single_point():
    karate = labelrank_data("karate.txt")
    config = labelrank.RunConfig(input=karate, output=os.devnull)
    table = labelrank.cmd_sweep(config, [1.5], [0.6])
    doc = labelrank.cmd_detect(labelrank.RunConfig(input=karate, output=os.devnull,
        params=config.params.copy(inflation=1.5, update_fraction=0.6)))
    assert table["modularity"][0] == doc.modularity
    assert table["communities"][0] == doc.partition.community_count


def test_bench(capsys):
    karate = labelrank_data("karate.txt")
    table, fit = labelrank.cmd_bench([karate], repetitions=3, output=os.devnull)
    assert table["edges"].tolist() == [78]
    assert fit is None

    table, fit = labelrank.cmd_bench([karate, "missing.txt"], synthetic=[500, 1000],
        output=os.devnull)
    assert len(table) == 3
    assert table["edges"].tolist() == [78, 500, 1000]
    assert set(fit.keys()) == set(["slope", "intercept", "rvalue"])

    with pytest.raises(RuntimeError):
        labelrank.cmd_bench(["missing.txt"], output=os.devnull)

    assert labelrank.main([prog, "bench", "missing.txt", "-l", "CRITICAL"]) == 2
    assert labelrank.main([prog, "bench", karate, "--synthetic", "200",
        "--format", "json", "-l", "ERROR"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["rows"]) == 2
    assert "slope" in data["fit"]


def test_stability(capsys):
    with TempFile(suffix=".txt") as infile:
        two_triangles(infile.name)
        assert labelrank.main([prog, "stability", infile.name, "--seeds", "0", "1",
            "2", "3", "4", "-l", "ERROR"]) == 0
        out = capsys.readouterr().out
        assert "# distinct: 1" in out.splitlines()

        config = labelrank.RunConfig(input=infile.name, algorithm="labelrank",
            output=os.devnull)
        assert labelrank.cmd_stability(config)["distinct"] == 1

    karate = labelrank_data("karate.txt")
    assert labelrank.main([prog, "stability", karate, "--format", "json",
        "-l", "ERROR"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["rows"]) == 10
    assert data["summary"]["min"] <= data["summary"]["max"]

    config = labelrank.RunConfig(input=karate, algorithm="labelrank", output=os.devnull)
    assert labelrank.cmd_stability(config)["distinct"] == 1


@pytest.mark.slow
def test_karate_sweep():
    karate = labelrank_data("karate.txt")
    config = labelrank.RunConfig(input=karate, truth=labelrank_data("karate_truth.txt"),
        output=os.devnull)
    table = labelrank.cmd_sweep(config, [1, 1.5, 2], [0.5, 0.6, 0.7])
    found = table[(table["communities"] == 2) & (table["agreement"] == 1.0)]
    assert len(found) >= 1
    assert found["modularity"].iloc[0] == pytest.approx(0.37, abs=0.01)


@pytest.mark.slow
@football
def test_football_sweep():
    config = labelrank.RunConfig(input=labelrank_data("football.txt"), output=os.devnull)
    table = labelrank.cmd_sweep(config, [1, 1.5, 2], [0.5, 0.6])
    assert table["modularity"].max() >= 0.58


def test_stability_mismatch(monkeypatch):
    from labelrank import Graph
    karate = labelrank_data("karate.txt")
    calls = []
    run = labelrank.run_labelrank

    def unstable(graph, params=None, **kwargs):
        calls.append(graph)
        if len(calls) % 2 == 0:
            graph = Graph.from_edges([(0, 1)], node_count=graph.node_count)
        return run(graph, params, **kwargs)

    monkeypatch.setattr(labelrank, "run_labelrank", unstable)
    config = labelrank.RunConfig(input=karate, algorithm="labelrank", output=os.devnull)
    with pytest.raises(RuntimeError):
        labelrank.cmd_stability(config)
    assert labelrank.main([prog, "stability", karate, "--algorithm", "labelrank",
        "-l", "CRITICAL"]) == 2
