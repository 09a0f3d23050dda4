"""Machine-readable results of a community detection run

A :class:`ResultDocument` is written either as JSON::

    {
        "assignment": {"1": "1", "2": "1", ...},
        "summary": {"algorithm": "labelrank", "communities": 2, ...},
        "trace": [{"iteration": 1, "num_change": 34, ...}, ...]
    }

or as TSV: a ``node<TAB>community`` header followed by one row per node,
and, when a trace was recorded, a blank line and the trace table. Both
formats use the original node ids; a community is named after its
smallest member. The same run on the same input always gives the same
bytes (the wall time is only included on request).
"""
import io
import json
import sys
from collections import OrderedDict

import pandas as pd

__all__ = ["ResultDocument", "write_text"]


def write_text(text, output=None):
    """Write text to a file, or to stdout if output is None"""
    if output is None:
        sys.stdout.write(text)
    else:
        with io.open(output, "w", encoding="utf-8") as fout:
            fout.write(text)


class ResultDocument(object):
    """Summary, assignment and optional trace of a run"""
    def __init__(self, graph, partition, algorithm, iterations=None, converged=None,
            modularity=None, trace=None, agreement=None, settings=None, wall_time=None):
        """.. rubric:: constructor

        :param graph: the input :class:`~labelrank.network.graph.Graph`
        :param partition: the detected :class:`~labelrank.metrics.partition.Partition`
        :param str algorithm: labelrank or lpa
        :param float modularity: Q (omitted from the summary when None)
        :param trace: an :class:`~labelrank.core.labelrank.IterationTrace`
        :param dict agreement: output of :func:`~labelrank.metrics.modularity.compare_partitions`
        :param dict settings: parameters of the run (Params fields, seed)
        :param float wall_time: seconds; omitted when None
        """
        self.graph = graph
        self.partition = partition
        self.algorithm = algorithm
        self.iterations = iterations
        self.converged = converged
        self.modularity = modularity
        self.trace = trace
        self.agreement = agreement
        self.settings = settings or {}
        self.wall_time = wall_time

    def _get_summary(self):
        summary = OrderedDict()
        summary["algorithm"] = self.algorithm
        summary["nodes"] = self.graph.node_count
        summary["edges"] = self.graph.remove_selfloops().edge_count
        summary["communities"] = self.partition.community_count
        if self.modularity is not None:
            summary["modularity"] = self.modularity
        summary["iterations"] = self.iterations
        summary["converged"] = self.converged
        summary["settings"] = dict(self.settings)
        if self.agreement is not None:
            summary["truth_identical"] = bool(self.agreement["identical"])
            summary["truth_agreement"] = self.agreement["agreement"]
        best = self.trace.best() if self.trace is not None else None
        if best is not None:
            summary["best_iteration"] = best.iteration
            summary["best_modularity"] = best.modularity
        if self.wall_time is not None:
            summary["wall_time"] = self.wall_time
        return summary
    summary = property(_get_summary)

    def _get_assignment(self):
        names = self.graph.names
        return OrderedDict((names[i], names[c]) for i, c in
            enumerate(self.partition.assignment.tolist()))
    assignment = property(_get_assignment,
        doc="ordered dictionary node id -> community id (original ids)")

    def to_json(self):
        data = {"summary": self.summary, "assignment": self.assignment}
        if self.trace is not None:
            data["trace"] = self.trace.as_list()
        return json.dumps(data, sort_keys=True, indent=4) + "\n"

    def to_tsv(self):
        frame = pd.DataFrame(list(self.assignment.items()), columns=["node", "community"])
        text = frame.to_csv(sep="\t", index=False)
        if self.trace is not None:
            text += "\n" + self.trace.as_frame().to_csv(sep="\t", index=False)
        return text

    def render(self, frmt="tsv"):
        if frmt == "json":
            return self.to_json()
        if frmt == "tsv":
            return self.to_tsv()
        raise ValueError("unknown format %s (tsv or json)" % frmt)

    def write(self, output=None, frmt="tsv"):
        write_text(self.render(frmt), output)
