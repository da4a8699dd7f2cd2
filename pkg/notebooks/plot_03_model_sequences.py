"""
Model sequences for induced subgraphs
=====================================

The deterministic sequences d_H (fixed subset S) and d_A (site percolation)
are built from binomial distribution functions and rounded half up.
"""

import numpy as np

from inducedseq import DegreeSequence, VertexSubset, binomial_table, build_dA, build_dH, model_stats

###########################################################################
# Binomial tables stay normalised even far in the tails.

for j, q in [(2, 1 / 3), (10_000, 0.999)]:
    t = binomial_table(j, q)
    print(j, q, t.pmf[:3], abs(t.pmf.sum() - 1))

###########################################################################
# Two small hand-checkable cases.

d = DegreeSequence([1, 1, 1, 1])
print(build_dH(d, VertexSubset.of(d, [1, 2])).hist)
print(build_dA(DegreeSequence([1, 1]), 0.5).hist)

###########################################################################
# For a larger random sequence the model's total degree tracks gamma^2 M.

rng = np.random.default_rng(3)
d = DegreeSequence(rng.integers(1, 10, size=5000))
S = VertexSubset.of(d, rng.choice(np.arange(1, d.n + 1), size=2000, replace=False))
m = build_dH(d, S)
print(m.length, S.s, model_stats(m)["M"], S.gamma ** 2 * d.M)
print("largest gap between full and small-degree expectations:", np.abs(m.ytilde_gap()).max())

###########################################################################
# The percolation model, with w~_k next to n_k.

print(build_dA(d, 0.4).csv())
