# -*- coding: utf-8 -*-
#
#  This file is part of labelrank software
#
#  Distributed under the terms of the 3-clause BSD license.
#
##############################################################################
""".. rubric:: Standalone application dedicated to community detection"""
import argparse
import json
import sys
import time

import numpy as np
import pandas as pd
from easydev import DevTools
from scipy.stats import linregress

from labelrank import logger, labelrank_debug_level
from labelrank.core.labelrank import run_labelrank
from labelrank.core.params import Params
from labelrank.errors import LabelRankError
from labelrank.io.document import ResultDocument, write_text
from labelrank.io.edgelist import load_edge_list, load_partition
from labelrank.lpa.lpa import run_lpa, lpa_stability_report
from labelrank.metrics.modularity import modularity, compare_partitions
from labelrank.metrics.partition import Partition
from labelrank.network.benchmark import GraphBenchmark
from labelrank.tools import run_concurrently

__all__ = ["Options", "RunConfig", "main", "cmd_detect", "cmd_sweep", "cmd_bench",
           "cmd_stability"]

devtools = DevTools()

#: defaults of the parameter sweep
DEFAULT_INFLATIONS = [1., 1.5, 2.]
DEFAULT_QS = [0.5, 0.6]
#: default number of LPA iterations
LPA_MAX_ITERATIONS = 100


class Options(argparse.ArgumentParser):
    def __init__(self, prog="labelrank"):
        usage = """\nUSAGE

        labelrank detect karate.txt --inflation 2 --q 0.6
        labelrank detect karate.txt --algorithm lpa --seed 42 --format json
        labelrank sweep football.txt --inflations 1 1.5 2 --qs 0.5 0.6
        labelrank bench graph1.txt graph2.txt --repetitions 3
        labelrank stability karate.txt --algorithm lpa --seeds 0 1 2 3 4

        """

        epilog = """ ----    """

        description = """DESCRIPTION:

Detect communities in an undirected, unweighted graph given as an edge list
(two node ids per line, lines starting with # ignored). LabelRank is
deterministic; LPA is provided as a randomised baseline. The number of
workers is capped by the LABELRANK_THREADS environment variable (0 = auto).

        """
        super(Options, self).__init__(usage=usage, prog=prog,
                description=description, epilog=epilog)

        params = argparse.ArgumentParser(add_help=False)
        group = params.add_argument_group("LabelRank parameters")
        group.add_argument("--config", dest="config", default=None,
            help="YAML file with parameters (flags take precedence)")
        group.add_argument("--inflation", dest="inflation", type=float, default=None,
            help="inflation exponent (>= 1, default 2)")
        group.add_argument("--cutoff", dest="cutoff", type=float, default=None,
            help="cutoff threshold r in [0, 1] (default 0.1)")
        group.add_argument("--q", dest="q", type=float, default=None,
            help="conditional update fraction q in [0, 1] (default 0.6)")
        group.add_argument("--stop-freq", dest="stop_freq", type=int, default=None,
            help="repetitions of numChange that stop a run (default 5)")
        group.add_argument("--max-iters", dest="max_iters", type=int, default=None,
            help="maximum number of iterations (default 1000, 100 for lpa)")
        group.add_argument("--no-conditional-update", dest="conditional_update",
            action="store_false", default=None,
            help="propagation, inflation and cutoff only")

        output = argparse.ArgumentParser(add_help=False)
        group = output.add_argument_group("Output")
        group.add_argument("--format", dest="format", default="tsv",
            choices=["tsv", "json"], help="output format")
        group.add_argument("--output", dest="output", default=None,
            help="output file (default: standard output)")
        group.add_argument("-l", "--logging-level", dest="logging_level",
            default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
            help="logging level")

        subparsers = self.add_subparsers(dest="command", metavar="COMMAND",
            parser_class=argparse.ArgumentParser)
        subparsers.required = True

        detect = subparsers.add_parser("detect", parents=[params, output],
            help="detect communities in a graph")
        detect.add_argument("input", help="edge list")
        detect.add_argument("--algorithm", dest="algorithm", default="labelrank",
            choices=["labelrank", "lpa"])
        detect.add_argument("--seed", dest="seed", type=int, default=0,
            help="seed of the LPA tie-breaking")
        detect.add_argument("--trace", dest="trace", action="store_true", default=False,
            help="record numChange, labels per node and Q at every iteration")
        detect.add_argument("--truth", dest="truth", default=None,
            help="ground-truth partition (node community per line)")
        detect.add_argument("--timing", dest="timing", action="store_true", default=False,
            help="include the wall time in the summary")

        sweep = subparsers.add_parser("sweep", parents=[params, output],
            help="run LabelRank over a grid of inflation and q")
        sweep.add_argument("input", help="edge list")
        sweep.add_argument("--inflations", dest="inflations", type=float, nargs="+",
            default=DEFAULT_INFLATIONS)
        sweep.add_argument("--qs", dest="qs", type=float, nargs="+", default=DEFAULT_QS)
        sweep.add_argument("--truth", dest="truth", default=None,
            help="ground-truth partition reported as agreement per grid point")

        bench = subparsers.add_parser("bench", parents=[params, output],
            help="time LabelRank on several graphs")
        bench.add_argument("inputs", nargs="*", help="edge lists")
        bench.add_argument("--synthetic", dest="synthetic", type=int, nargs="+",
            default=[], help="edge counts of random graphs to generate")
        bench.add_argument("--repetitions", dest="repetitions", type=int, default=1)

        stability = subparsers.add_parser("stability", parents=[params, output],
            help="count the distinct partitions over several runs")
        stability.add_argument("input", help="edge list")
        stability.add_argument("--algorithm", dest="algorithm", default="lpa",
            choices=["labelrank", "lpa"])
        stability.add_argument("--seeds", dest="seeds", type=int, nargs="+",
            default=list(range(10)))


class RunConfig(object):
    """Settings of a command, built from the command line options

    :attr:`params` is a :class:`~labelrank.core.params.Params` made from the
    optional YAML file overridden by the flags.
    """
    def __init__(self, input=None, algorithm="labelrank", params=None, seed=0,
            seeds=None, frmt="tsv", trace=False, truth=None, output=None,
            timing=False, lpa_iterations=LPA_MAX_ITERATIONS):
        devtools.check_param_in_list(algorithm, ["labelrank", "lpa"])
        devtools.check_param_in_list(frmt, ["tsv", "json"])
        self.input = input
        self.algorithm = algorithm
        self.params = params or Params()
        self.seed = seed
        self.seeds = list(seeds) if seeds is not None else list(range(10))
        self.format = frmt
        self.trace = trace
        self.truth = truth
        self.output = output
        self.timing = timing
        devtools.check_range(lpa_iterations, 1, float("inf"))
        self.lpa_iterations = lpa_iterations

    @classmethod
    def from_options(cls, options):
        params = Params.from_yaml(options.config) if options.config else Params()
        overrides = {"inflation": options.inflation, "cutoff": options.cutoff,
            "update_fraction": options.q, "stop_frequency": options.stop_freq,
            "max_iterations": options.max_iters,
            "conditional_update": options.conditional_update}
        params = params.copy(**dict((k, v) for k, v in overrides.items() if v is not None))
        return cls(input=getattr(options, "input", None),
            algorithm=getattr(options, "algorithm", "labelrank"),
            params=params,
            seed=getattr(options, "seed", 0),
            seeds=getattr(options, "seeds", None),
            frmt=options.format,
            trace=getattr(options, "trace", False),
            truth=getattr(options, "truth", None),
            output=options.output,
            timing=getattr(options, "timing", False),
            lpa_iterations=options.max_iters or LPA_MAX_ITERATIONS)


def _load_truth(config, graph):
    if config.truth is None:
        return None
    return Partition.from_mapping(graph.names, load_partition(config.truth))


def _detect(config, graph, workers=None):
    """Run the selected algorithm; return (partition, iterations, converged, trace)"""
    if config.algorithm == "lpa":
        res = run_lpa(graph, seed=config.seed, max_iterations=config.lpa_iterations)
        return res.partition, res.iterations, res.converged, None
    res = run_labelrank(graph, config.params, trace=config.trace, workers=workers)
    return res.partition, res.iterations, res.converged, res.trace


def _settings(config):
    if config.algorithm == "lpa":
        return {"seed": config.seed, "max_iterations": config.lpa_iterations}
    return config.params.as_dict()


def cmd_detect(config):
    """Detect communities and write a :class:`ResultDocument`"""
    graph = load_edge_list(config.input)
    truth = _load_truth(config, graph)

    t1 = time.time()
    partition, iterations, converged, trace = _detect(config, graph)
    wall_time = time.time() - t1
    logger.info("%s found %s communities in %.3f seconds" % (config.algorithm,
        partition.community_count, wall_time))

    original = graph.remove_selfloops()
    Q = modularity(original, partition) if original.edge_count > 0 else None
    agreement = compare_partitions(partition, truth) if truth is not None else None
    doc = ResultDocument(graph, partition, config.algorithm, iterations=iterations,
        converged=converged, modularity=Q, trace=trace if config.trace else None,
        agreement=agreement, settings=_settings(config),
        wall_time=wall_time if config.timing else None)
    doc.write(config.output, config.format)
    return doc


def cmd_sweep(config, inflations=None, qs=None):
    """Run LabelRank on every (inflation, q) of the grid

    :return: a pandas DataFrame in grid order (inflation-major) with columns
        inflation, q, modularity, communities, iterations, converged (and
        agreement with a ground truth), plus a boolean column best flagging
        the first row of maximal modularity
    """
    inflations = list(inflations or DEFAULT_INFLATIONS)
    qs = list(qs or DEFAULT_QS)
    if not inflations or not qs:
        raise ValueError("the sweep grid cannot be empty")
    graph = load_edge_list(config.input)
    truth = _load_truth(config, graph)
    original = graph.remove_selfloops()
    grid = [config.params.copy(inflation=x, update_fraction=q) for x in inflations for q in qs]

    def _run(params):
        res = run_labelrank(graph, params, workers=1)
        row = {"inflation": params.inflation, "q": params.update_fraction,
               "modularity": modularity(original, res.partition),
               "communities": res.partition.community_count,
               "iterations": res.iterations, "converged": res.converged}
        if truth is not None:
            row["agreement"] = compare_partitions(res.partition, truth).agreement
        return row

    rows = run_concurrently(_run, grid)
    columns = ["inflation", "q", "modularity", "communities", "iterations", "converged"]
    if truth is not None:
        columns.append("agreement")
    table = pd.DataFrame(rows, columns=columns)
    table["best"] = False
    table.loc[int(np.argmax(table["modularity"].values)), "best"] = True
    best = table[table["best"]].iloc[0]
    logger.info("Best Q=%.4f with inflation=%s and q=%s" % (best["modularity"],
        best["inflation"], best["q"]))

    if config.format == "json":
        text = json.dumps({"rows": json.loads(table.to_json(orient="records"))},
            sort_keys=True, indent=4) + "\n"
    else:
        text = table.to_csv(sep="\t", index=False)
    write_text(text, config.output)
    return table


def cmd_bench(inputs, params=None, repetitions=1, synthetic=None, frmt="tsv",
        output=None):
    """Time LabelRank on several graphs and fit the time against m

    :param inputs: edge-list files; unreadable ones are skipped with a warning
    :param synthetic: edge counts of random graphs to generate as well
    :return: a tuple (table, fit) where fit is None with fewer than 2 graphs
        or the slope, intercept and rvalue of the linear fit
    :raises RuntimeError: if no graph could be timed
    """
    params = params or Params()
    if repetitions < 1:
        raise ValueError("repetitions must be positive")
    graphs = []
    for filename in inputs:
        try:
            graphs.append((filename, load_edge_list(filename)))
        except (IOError, OSError, LabelRankError) as err:
            logger.warning("Skipping %s: %s" % (filename, err))
    benchmark = GraphBenchmark()
    for m in synthetic or []:
        graphs.append(("random-m%s" % m, benchmark.create_graph(m)))
    if not graphs:
        raise RuntimeError("no graph could be benchmarked")

    rows = []
    for name, graph in graphs:
        timings = []
        for _ in range(repetitions):
            res = run_labelrank(graph, params)
            timings.append(res.duration)
        rows.append({"graph": name, "nodes": graph.node_count,
            "edges": graph.remove_selfloops().edge_count,
            "mean_time": float(np.mean(timings)), "iterations": res.iterations})
        logger.info("%s: %.3f s (%s iterations)" % (name, rows[-1]["mean_time"],
            res.iterations))
    table = pd.DataFrame(rows, columns=["graph", "nodes", "edges", "mean_time", "iterations"])

    fit = None
    if len(table) >= 2 and table["edges"].nunique() >= 2:
        reg = linregress(table["edges"].values, table["mean_time"].values)
        fit = {"slope": float(reg.slope), "intercept": float(reg.intercept),
               "rvalue": float(reg.rvalue)}
    else:
        logger.warning("the scaling fit needs at least 2 graphs of different sizes")

    if frmt == "json":
        text = json.dumps({"rows": json.loads(table.to_json(orient="records")),
            "fit": fit}, sort_keys=True, indent=4) + "\n"
    else:
        text = ""
        if fit is not None:
            text += "".join("# %s: %s\n" % (k, fit[k]) for k in sorted(fit))
        text += table.to_csv(sep="\t", index=False)
    write_text(text, output)
    return table, fit


def cmd_stability(config, seeds=None):
    """Count the distinct partitions over several runs

    LPA runs once per seed. LabelRank needs no seed: it runs twice and the
    two partitions (and traces) must be identical.

    :return: a dictionary with distinct, min, max, mean and a per-run table
    """
    seeds = list(seeds if seeds is not None else config.seeds)
    graph = load_edge_list(config.input)
    if config.algorithm == "lpa":
        report = lpa_stability_report(graph, seeds, max_iterations=config.lpa_iterations)
        table = report.table
        summary = {"algorithm": "lpa", "distinct": report.distinct, "min": report.min,
            "max": report.max, "mean": report.mean, "best_seed": report.best_seed}
    else:
        first = run_labelrank(graph, config.params)
        second = run_labelrank(graph, config.params)
        if first.partition != second.partition or first.trace != second.trace:
            raise RuntimeError("LabelRank produced two different partitions on %s"
                % config.input)
        distinct = len(set([first.partition.canonical(), second.partition.canonical()]))
        Q = modularity(graph.remove_selfloops(), first.partition)
        table = pd.DataFrame({"run": [1, 2],
            "communities": [first.partition.community_count,
                second.partition.community_count],
            "modularity": [Q, modularity(graph.remove_selfloops(), second.partition)],
            "iterations": [first.iterations, second.iterations]},
            columns=["run", "communities", "modularity", "iterations"])
        summary = {"algorithm": "labelrank", "distinct": distinct, "min": Q, "max": Q,
            "mean": Q}
    logger.info("%s distinct partitions" % summary["distinct"])

    if config.format == "json":
        text = json.dumps({"summary": summary,
            "rows": json.loads(table.to_json(orient="records"))},
            sort_keys=True, indent=4) + "\n"
    else:
        text = "".join("# %s: %s\n" % (k, summary[k]) for k in sorted(summary))
        text += table.to_csv(sep="\t", index=False)
    write_text(text, config.output)
    summary["table"] = table
    return summary


def main(args=None):
    """Entry point; return the exit code (0 success, 1 usage or input error,
    2 runtime failure)"""
    if args is None:
        args = sys.argv[:]

    user_options = Options(prog="labelrank")
    try:
        options = user_options.parse_args(args[1:])
    except SystemExit as err:
        # --help exits normally, argument errors are usage errors
        if err.code in (0, None):
            raise
        return 1

    labelrank_debug_level(options.logging_level)

    try:
        if options.command == "bench":
            params = RunConfig.from_options(options).params
            cmd_bench(options.inputs, params=params, repetitions=options.repetitions,
                synthetic=options.synthetic, frmt=options.format, output=options.output)
            return 0
        config = RunConfig.from_options(options)
        if options.command == "detect":
            cmd_detect(config)
        elif options.command == "sweep":
            cmd_sweep(config, options.inflations, options.qs)
        elif options.command == "stability":
            cmd_stability(config)
    except (ValueError, IOError, OSError) as err:
        logger.critical(str(err))
        return 1
    except Exception as err:
        logger.critical("%s: %s" % (type(err).__name__, err))
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
