import itertools

import numpy as np
import pytest


def brute_force_graphs(degrees):
    """Every edge subset of K_n whose degree vector equals ``degrees``.

    Independent of the backtracking enumerator; only usable for n <= 6.
    """
    n = len(degrees)
    slots = list(itertools.combinations(range(n), 2))
    target = list(degrees)
    out = []
    for mask in range(1 << len(slots)):
        deg = [0] * n
        chosen = []
        for b, (u, v) in enumerate(slots):
            if mask >> b & 1:
                deg[u] += 1
                deg[v] += 1
                chosen.append((u, v))
        if deg == target:
            out.append(frozenset(chosen))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
