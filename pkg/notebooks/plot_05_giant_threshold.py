"""
Giant component threshold
=========================

R(d_A) / (p^2 M) switches on near the site-percolation critical point; for
3-regular graphs that point is 1/2.
"""

from inducedseq import DegreeSequence, SamplerConfig, build_dA, joos_stats
from inducedseq.giant import giant_predicate_perc
from inducedseq.graphs import components
from inducedseq.harness import crossing_point
from inducedseq.percolation import percolated_sample

d = DegreeSequence([3] * 20_000)
print(joos_stats(d))

for p in (0.3, 0.45, 0.5, 0.55, 0.7):
    v = giant_predicate_perc(build_dA(d, p), 0.01, d, p)
    print(p, round(v.ratio, 4), v.hasGiant)

print("crossing:", crossing_point(d))

###########################################################################
# The sampled graphs agree.

for p in (0.3, 0.7):
    _, out = percolated_sample(d, p, SamplerConfig(seed=4))
    c = components(out.inducedGraph)
    print(p, c.largest, c.nonIsolated)
