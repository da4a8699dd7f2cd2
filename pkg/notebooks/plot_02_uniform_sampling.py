"""
Sampling uniform graphs with a given degree sequence
====================================================

Rejection from the pairing model is exact; the double-edge swap chain takes
over when rejection would need too many pairings.
"""

from collections import Counter

from inducedseq import DegreeSequence, SamplerConfig, enumerate_graphs, sample_uniform
from inducedseq.sampler import expected_pairings, make_rng, sample_with_stats, spawn_seeds

###########################################################################
# (1,1,1,1) has three perfect matchings. Sample many and count.

d = DegreeSequence([1, 1, 1, 1])
print(len(enumerate_graphs(d)), "realisations")
rng = make_rng(1)
cfg = SamplerConfig(method="rejection")
counts = Counter(tuple(map(tuple, sample_uniform(d, cfg, rng).edges.tolist())) for _ in range(3000))
for edges, c in sorted(counts.items()):
    print(edges, c)

###########################################################################
# The auto method looks at the expected number of pairings per simple graph.

for k in (3, 8):
    dk = DegreeSequence([k] * 2000)
    G, info = sample_with_stats(dk, SamplerConfig(seed=7))
    print(k, round(expected_pairings(dk), 1), info["method"], G.m)

###########################################################################
# Independent seeds for many draws come from one master seed.

print(spawn_seeds(42, 3))
