"""
Verification suites
===================

Each suite returns a report with gates (measured value, threshold, verdict)
and a JSON body that is byte-identical across reruns with the same config.
"""

from inducedseq.harness import run_suite

report = run_suite("switching", {"sequence": {"entries": [1, 1, 1, 1]},
                                 "subset": {"indices": [1, 2]}})
print("\n".join(report.lines()))
print(report.results["degreeSwitching"][0])

###########################################################################
# A small Monte Carlo suite.

cfg = {"sequence": {"regular": {"n": 2000, "k": 4}}, "p": 0.3, "trials": 5, "seed": 1}
report = run_suite("thm25", cfg)
print("\n".join(report.lines()))
print(report.to_json() == run_suite("thm25", cfg).to_json())
