import itertools
from collections import Counter

import numpy as np
import pytest
from scipy.stats import chi2

from inducedseq.core import DegreeSequence, VertexSubset
from inducedseq.graphs import Graph, degree_sequence_of
from inducedseq.percolation import fixed_subset_pipeline, percolate_site, percolated_sample
from inducedseq.sampler import SamplerConfig, make_rng, sample_uniform, spawn_seeds

TRIANGLE = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def test_p_zero():
    out = percolate_site(TRIANGLE, 0.0, 1)
    assert out.sizeS == 0 and out.inducedGraph.n == 0 and out.degS == 0


def test_p_one_is_identity():
    G = sample_uniform(DegreeSequence([3] * 40), SamplerConfig(seed=2))
    out = percolate_site(G, 1.0, 5)
    assert out.inducedGraph == G
    assert out.inducedSeq == degree_sequence_of(G)
    assert out.sizeS == 40


def test_invariants():
    G = sample_uniform(DegreeSequence([2] * 10 + [4] * 10), SamplerConfig(seed=4))
    d = DegreeSequence(G.degrees)
    rng = make_rng(9)
    for _ in range(50):
        out = percolate_site(G, 0.6, rng, d=d)
        assert out.inducedSeq == degree_sequence_of(out.inducedGraph)
        assert out.sizeS == out.survivors.s == out.inducedGraph.n
        assert sorted(out.rawDegrees.tolist()) == out.inducedSeq.entries.tolist()
        assert out.degS == int(d.entries[out.survivors.zero_based].sum())


def test_triangle_pair_probability():
    rng = make_rng(11)
    trials = 8000
    hits = 0
    for _ in range(trials):
        out = percolate_site(TRIANGLE, 0.5, rng)
        if out.sizeS == 2:
            hits += 1
            assert out.inducedGraph.m == 1
    sigma = np.sqrt(3 / 8 * 5 / 8 / trials)
    assert abs(hits / trials - 3 / 8) < 4 * sigma


def test_reproducible_by_seed():
    a = percolate_site(TRIANGLE, 0.5, 123)
    b = percolate_site(TRIANGLE, 0.5, 123)
    assert a.survivors.indices.tolist() == b.survivors.indices.tolist()
    assert a.seed == 123


@pytest.mark.parametrize("n, p", [(2, 0.5), (3, 0.3), (4, 0.7)])
def test_survivor_law(n, p):
    G = Graph.empty(n)
    rng = make_rng(n)
    trials = 20_000
    counts = Counter(tuple(percolate_site(G, p, rng).survivors.indices.tolist()) for _ in range(trials))
    stat = 0.0
    for size in range(n + 1):
        for T in itertools.combinations(range(1, n + 1), size):
            expected = trials * p ** size * (1 - p) ** (n - size)
            stat += (counts.get(T, 0) - expected) ** 2 / expected
    assert stat < chi2.ppf(0.999, 2 ** n - 1)


def test_mean_size_concentration():
    n = 200
    G = sample_uniform(DegreeSequence([3] * n), SamplerConfig(seed=1))
    rng = make_rng(3)
    trials = 10_000
    mean = np.mean([percolate_site(G, 0.5, rng).sizeS for _ in range(trials)])
    assert abs(mean - n / 2) < 4 * np.sqrt(n) / 2 / np.sqrt(trials)


def test_unsorted_graph_needs_sequence():
    G = Graph.from_edges(3, [(0, 1), (0, 2)])
    with pytest.raises(ValueError):
        percolate_site(G, 0.5, 1)


class TestPipeline:
    def test_unique_realisation(self):
        d = DegreeSequence([2, 2, 2])
        S = VertexSubset.of(d, [1, 2])
        for seed in range(10):
            out = fixed_subset_pipeline(d, S, SamplerConfig(seed=seed))
            assert out.inducedGraph.m == 1
            assert out.inducedSeq.entries.tolist() == [1, 1]

    def test_matching_frequencies(self):
        d = DegreeSequence([1, 1, 1, 1])
        S = VertexSubset.of(d, [1, 2])
        trials = 6000
        edge = sum(fixed_subset_pipeline(d, S, SamplerConfig(seed=s)).inducedGraph.m
                   for s in spawn_seeds(5, trials))
        sigma = np.sqrt(1 / 3 * 2 / 3 / trials)
        assert abs(edge / trials - 1 / 3) < 4 * sigma

    def test_subset_constants(self):
        d = DegreeSequence([1, 2, 2, 3, 3, 3])
        S = VertexSubset.of(d, [2, 4, 6])
        outs = [fixed_subset_pipeline(d, S, SamplerConfig(seed=s)) for s in range(5)]
        assert {o.sizeS for o in outs} == {3}
        assert {o.degS for o in outs} == {8}

    def test_deterministic(self):
        d = DegreeSequence([3] * 30)
        S = VertexSubset.of(d, range(1, 16))
        a = fixed_subset_pipeline(d, S, SamplerConfig(seed=8))
        b = fixed_subset_pipeline(d, S, SamplerConfig(seed=8))
        assert a.inducedGraph == b.inducedGraph


def test_percolated_sample():
    d = DegreeSequence([3] * 100)
    G, out = percolated_sample(d, 0.5, SamplerConfig(seed=3))
    G2, out2 = percolated_sample(d, 0.5, SamplerConfig(seed=3))
    assert G == G2 and out.survivors.indices.tolist() == out2.survivors.indices.tolist()
    assert out.inducedGraph.n == out.sizeS
