"""Degree sequences of induced subgraphs of uniform random graphs with a given
degree sequence, for fixed vertex sets and under site percolation."""

__version__ = "0.1.0"

from .core import (
    ConditionReport,
    DegreeSequence,
    SequenceError,
    VertexSubset,
    check_condition_fixed_S,
    check_condition_percolation,
    default_delta,
    is_graphical,
    koren_witness,
    load_sequence,
    load_subset,
)
from .giant import (
    GiantStats,
    giant_predicate_fixed,
    giant_predicate_perc,
    joos_stats,
    sequence_closeness_report,
)
from .graphs import ComponentSummary, Graph, components, degree_sequence_of, induced_subgraph
from .model_seq import BinomialTable, ModelSequence, binomial_table, build_dA, build_dH, model_stats
from .percolation import PercolationOutcome, fixed_subset_pipeline, percolate_site
from .sampler import (
    GraphClassIndex,
    SamplerConfig,
    class_counts,
    enumerate_graphs,
    sample_uniform,
)

__all__ = [
    "BinomialTable", "ComponentSummary", "ConditionReport", "DegreeSequence", "GiantStats",
    "Graph", "GraphClassIndex", "ModelSequence", "PercolationOutcome", "SamplerConfig",
    "SequenceError", "VertexSubset", "binomial_table", "build_dA", "build_dH",
    "check_condition_fixed_S", "check_condition_percolation", "class_counts", "components",
    "default_delta", "degree_sequence_of", "enumerate_graphs", "fixed_subset_pipeline",
    "giant_predicate_fixed", "giant_predicate_perc", "induced_subgraph", "is_graphical",
    "joos_stats", "koren_witness", "load_sequence", "load_subset", "model_stats",
    "percolate_site", "sample_uniform", "sequence_closeness_report",
]
