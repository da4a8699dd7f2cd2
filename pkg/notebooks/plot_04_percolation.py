"""
Site percolation and the fixed-subset pipeline
==============================================

Sample a graph, keep each vertex with probability p and look at the
subgraph the survivors induce.
"""

import numpy as np

from inducedseq import DegreeSequence, SamplerConfig, VertexSubset, build_dH, fixed_subset_pipeline
from inducedseq.giant import sequence_closeness_report
from inducedseq.percolation import percolated_sample

d = DegreeSequence([4] * 20_000)
G, out = percolated_sample(d, 0.3, SamplerConfig(seed=1))
print(out.summary())
print("np =", d.n * 0.3, " pM =", d.M * 0.3)

###########################################################################
# With S fixed, compare the induced sequence to d_H.

rng = np.random.default_rng(2)
S = VertexSubset.of(d, rng.choice(np.arange(1, d.n + 1), size=d.n // 2, replace=False))
m = build_dH(d, S)
res = fixed_subset_pipeline(d, S, SamplerConfig(seed=3))
print(np.bincount(res.inducedSeq.entries))
print(m.counts)
print({k: round(v, 4) for k, v in sequence_closeness_report(res.inducedSeq, m).items()})
