"""Site percolation on sampled graphs and the fixed-subset pipeline."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DegreeSequence, VertexSubset
from .graphs import Graph, degree_sequence_of, induced_subgraph
from .sampler import SamplerConfig, make_rng, sample_with_stats


@dataclass(frozen=True, eq=False)
class PercolationOutcome:
    """Survivors, the graph they induce and its degrees.

    ``rawDegrees[k]`` is the induced degree of the k-th survivor (vertex order);
    ``inducedSeq`` is the same multiset sorted.
    """

    survivors: VertexSubset
    inducedGraph: Graph
    inducedSeq: DegreeSequence
    rawDegrees: np.ndarray
    sizeS: int
    degS: int
    seed: int | None
    sampleInfo: dict | None = None

    def summary(self) -> dict:
        return {
            "sizeS": self.sizeS,
            "degS": self.degS,
            "inducedEdges": self.inducedGraph.m,
            "inducedM": self.inducedSeq.M,
            "n0": self.inducedSeq.count(0),
            "seed": self.seed,
        }


def _outcome(G: Graph, S: VertexSubset, seed, info=None) -> PercolationOutcome:
    H = induced_subgraph(G, S)
    raw = H.degrees
    return PercolationOutcome(
        survivors=S,
        inducedGraph=H,
        inducedSeq=degree_sequence_of(H),
        rawDegrees=raw,
        sizeS=S.s,
        degS=S.dS,
        seed=seed,
        sampleInfo=info,
    )


def survivor_mask(n: int, p: float, rng: np.random.Generator) -> np.ndarray:
    # one uniform per vertex in index order
    return rng.random(n) < p


def percolate_site(G: Graph, p: float, seed: int | np.random.Generator,
                   d: DegreeSequence | None = None) -> PercolationOutcome:
    """Keep each vertex independently with probability ``p``.

    ``d`` supplies the degree sequence the survivor set is measured against;
    by default it is read off ``G`` (whose vertex order must then be sorted
    by degree for 1-based positions to agree with the sequence).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if isinstance(seed, np.random.Generator):
        rng, seed_val = seed, None
    else:
        rng, seed_val = make_rng(seed), int(seed)
    if d is None:
        d = DegreeSequence.permissive(G.degrees)
        if not np.array_equal(d.entries, G.degrees):
            raise ValueError("graph vertices are not in degree order; pass d explicitly")
    mask = survivor_mask(G.n, p, rng)
    return _outcome(G, VertexSubset.from_mask(d, mask), seed_val)


def fixed_subset_pipeline(d: DegreeSequence, S: VertexSubset, cfg: SamplerConfig
                          ) -> PercolationOutcome:
    """Sample G uniformly (seeded by ``cfg.seed``) and return G[S]."""
    G, info = sample_with_stats(d, cfg, make_rng(cfg.seed))
    return _outcome(G, S, cfg.seed, info)


def percolated_sample(d: DegreeSequence, p: float, cfg: SamplerConfig) -> tuple[Graph, PercolationOutcome]:
    """Sample G and percolate it, from two independent streams split from ``cfg.seed``."""
    ss = np.random.SeedSequence(cfg.seed)
    g_seq, s_seq = ss.spawn(2)
    G, info = sample_with_stats(d, cfg, np.random.Generator(np.random.PCG64(g_seq)))
    mask = survivor_mask(d.n, p, np.random.Generator(np.random.PCG64(s_seq)))
    out = _outcome(G, VertexSubset.from_mask(d, mask), cfg.seed, info)
    return G, out
