"""
Graphical degree sequences
==========================

Loading a sequence, testing whether a simple graph realises it and reading
off the witness when none does.
"""

from inducedseq import DegreeSequence, is_graphical, koren_witness
from inducedseq.core import load_sequence

###########################################################################
# Sequences are sorted on load and carry their moments.

d = load_sequence("3 1 2 2 1 3")
print(d.entries, d.M, d.M2, d.Delta, d.hist)

###########################################################################
# A star plus an isolated vertex is fine; two degree-3 vertices on four
# vertices are not, and the witness names the offending sets.

print(is_graphical([3, 1, 1, 1, 0]))
bad = DegreeSequence([3, 3, 1, 1])
print(is_graphical(bad), koren_witness(bad))

###########################################################################
# The test is vectorised, so a million entries is cheap.

import numpy as np

big = DegreeSequence(np.random.default_rng(0).integers(1, 20, size=1_000_000) * 2)
print(is_graphical(big))
