"""Uniform sampling of simple graphs with a given degree sequence.

Two routes are provided. ``rejection`` draws a random pairing of degree
stubs and retries until the result is simple; conditioned on simplicity every
labelled graph has the same number of pairings, so the output is exactly
uniform. ``switch_chain`` starts from a Havel–Hakimi realisation and runs a
lazy double-edge-swap Markov chain; it is only approximately uniform.

Small sequences can be enumerated exhaustively with :func:`enumerate_graphs`,
which serves as an exact oracle for class counts.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numba
import numpy as np

from .core import DegreeSequence, VertexSubset, is_graphical
from .graphs import Graph

log = logging.getLogger(__name__)

METHODS = ("rejection", "switch_chain", "auto")


class SamplingError(RuntimeError):
    pass


class NotGraphicalError(ValueError):
    pass


@dataclass(frozen=True)
class SamplerConfig:
    method: str = "auto"
    seed: int = 0
    switchSteps: int | None = None
    maxRejections: int = 100_000
    # auto picks rejection while the estimated mean number of pairings drawn
    # stays under this budget
    rejectionBudget: float = 2_000.0

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")
        if self.switchSteps is not None and self.switchSteps < 0:
            raise ValueError("switchSteps must be >= 0")
        if self.maxRejections < 1:
            raise ValueError("maxRejections must be >= 1")

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "seed": self.seed,
            "switchSteps": self.switchSteps,
            "maxRejections": self.maxRejections,
            "rejectionBudget": self.rejectionBudget,
        }


# -- RNG ------------------------------------------------------------------------


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def spawn_seeds(seed: int, count: int) -> list[int]:
    """Independent 64-bit child seeds split from ``seed`` via SeedSequence."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(c.generate_state(1, np.uint64)[0]) for c in children]


# -- rejection (pairing model) ----------------------------------------------------


def expected_pairings(d: DegreeSequence) -> float:
    """Approximate mean number of pairings drawn before a simple one.

    Uses the Poisson limit for loops and double edges: P(simple) is close to
    exp(-lam - lam^2) with lam = (M2 - M) / (2M).
    """
    if d.M == 0:
        return 1.0
    lam = (d.M2 - d.M) / (2 * d.M)
    return math.exp(lam + lam * lam)


def _pairing_edges(stubs: np.ndarray, n: int, rng: np.random.Generator) -> np.ndarray | None:
    perm = rng.permutation(stubs)
    a, b = perm[0::2], perm[1::2]
    if np.any(a == b):
        return None
    u = np.minimum(a, b)
    v = np.maximum(a, b)
    keys = np.sort(u * n + v)
    if keys.size > 1 and np.any(keys[1:] == keys[:-1]):
        return None
    return np.stack([u, v], axis=1)


def sample_rejection(d: DegreeSequence, rng: np.random.Generator, max_rejections: int = 100_000
                     ) -> tuple[Graph, int]:
    """Exactly uniform sample; returns the graph and the number of rejected pairings."""
    stubs = np.repeat(np.arange(d.n, dtype=np.int64), d.entries)
    for attempt in range(max_rejections):
        edges = _pairing_edges(stubs, d.n, rng)
        if edges is not None:
            return Graph.from_edges(d.n, edges, validate=False), attempt
    raise SamplingError(
        f"no simple pairing in {max_rejections} attempts; use switch_chain for this sequence"
    )


# -- Havel–Hakimi and the swap chain -------------------------------------------------


def havel_hakimi(d: DegreeSequence) -> Graph:
    """Deterministic realisation: repeatedly join the vertex of largest residual
    degree to the vertices of next-largest residual degree."""
    if not is_graphical(d):
        raise NotGraphicalError(f"{d!r} is not graphical")
    residual = d.entries.astype(np.int64).copy()
    buckets: list[set] = [set() for _ in range(d.Delta + 1)]
    for v, r in enumerate(residual.tolist()):
        if r > 0:
            buckets[r].add(v)
    top = d.Delta
    edges = []
    while True:
        while top > 0 and not buckets[top]:
            top -= 1
        if top == 0:
            break
        v = min(buckets[top])
        buckets[top].discard(v)
        need = int(residual[v])
        residual[v] = 0
        chosen = []
        k = top
        while len(chosen) < need:
            while k > 0 and not buckets[k]:
                k -= 1
            if k == 0:
                raise NotGraphicalError("Havel–Hakimi ran out of partners")
            w = min(buckets[k])
            buckets[k].discard(w)
            chosen.append(w)
        for w in chosen:
            edges.append((v, w))
            residual[w] -= 1
            if residual[w] > 0:
                buckets[residual[w]].add(w)
    return Graph.from_edges(d.n, np.array(edges, dtype=np.int64).reshape(-1, 2))


@numba.njit(cache=True)
def _adjacent(slots, deg, u, v):
    for k in range(deg[u]):
        if slots[u, k] == v:
            return True
    return False


@numba.njit(cache=True)
def _replace(slots, deg, u, old, new):
    for k in range(deg[u]):
        if slots[u, k] == old:
            slots[u, k] = new
            return


@numba.njit(cache=True)
def _swap_steps(eu, ev, slots, deg, pick1, pick2, flip):
    accepted = 0
    for t in range(pick1.shape[0]):
        e1 = pick1[t]
        e2 = pick2[t]
        if e1 == e2:
            continue
        a, b = eu[e1], ev[e1]
        c, d = eu[e2], ev[e2]
        if flip[t]:
            c, d = d, c
        # proposal: ab, cd -> ad, cb
        if a == d or c == b or a == c or b == d:
            continue
        if _adjacent(slots, deg, a, d) or _adjacent(slots, deg, c, b):
            continue
        _replace(slots, deg, a, b, d)
        _replace(slots, deg, b, a, c)
        _replace(slots, deg, c, d, b)
        _replace(slots, deg, d, c, a)
        eu[e1], ev[e1] = a, d
        eu[e2], ev[e2] = c, b
        accepted += 1
    return accepted


class SwapChain:
    """Double-edge-swap chain state; :meth:`run` advances it in place."""

    CHUNK = 1 << 20

    def __init__(self, G: Graph):
        self.n = G.n
        self.eu = G.edges[:, 0].copy()
        self.ev = G.edges[:, 1].copy()
        self.deg = G.degrees.copy()
        width = max(1, int(self.deg.max()) if self.n else 1)
        self.slots = np.full((self.n, width), -1, dtype=np.int64)
        for v in range(self.n):
            row = G.neighbors(v)
            self.slots[v, :row.size] = row
        self.steps = 0
        self.accepted = 0

    @property
    def m(self) -> int:
        return int(self.eu.size)

    def run(self, steps: int, rng: np.random.Generator) -> None:
        if self.m < 2:
            self.steps += steps
            return
        left = steps
        while left > 0:
            k = min(left, self.CHUNK)
            pick1 = rng.integers(0, self.m, size=k)
            pick2 = rng.integers(0, self.m, size=k)
            flip = rng.integers(0, 2, size=k).astype(np.bool_)
            self.accepted += _swap_steps(self.eu, self.ev, self.slots, self.deg, pick1, pick2, flip)
            left -= k
        self.steps += steps

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, np.stack([self.eu, self.ev], axis=1))


def default_switch_steps(m: int) -> int:
    return int(math.ceil(20 * m * math.log(m))) if m > 1 else 0


def sample_switch_chain(d: DegreeSequence, rng: np.random.Generator, steps: int | None = None
                        ) -> tuple[Graph, int]:
    chain = SwapChain(havel_hakimi(d))
    if steps is None:
        steps = default_switch_steps(chain.m)
    chain.run(steps, rng)
    return chain.graph(), chain.accepted


# -- public entry points -----------------------------------------------------------------


def resolve_method(d: DegreeSequence, cfg: SamplerConfig) -> str:
    if cfg.method != "auto":
        return cfg.method
    if expected_pairings(d) <= cfg.rejectionBudget:
        return "rejection"
    log.warning("expected %.3g pairings for rejection; falling back to switch_chain",
                expected_pairings(d))
    return "switch_chain"


def sample_with_stats(d: DegreeSequence, cfg: SamplerConfig, rng: np.random.Generator | None = None
                      ) -> tuple[Graph, dict]:
    """Draw one graph; the dict records method, retries or accepted swaps."""
    if not is_graphical(d):
        raise NotGraphicalError(f"{d!r} is not graphical")
    if rng is None:
        rng = make_rng(cfg.seed)
    method = resolve_method(d, cfg)
    if method == "rejection":
        G, retries = sample_rejection(d, rng, cfg.maxRejections)
        return G, {"method": method, "retries": retries}
    steps = cfg.switchSteps
    G, accepted = sample_switch_chain(d, rng, steps)
    return G, {
        "method": method,
        "switchSteps": steps if steps is not None else default_switch_steps(d.M // 2),
        "acceptedSwaps": accepted,
    }


def sample_uniform(d: DegreeSequence, cfg: SamplerConfig, rng: np.random.Generator | None = None
                   ) -> Graph:
    return sample_with_stats(d, cfg, rng)[0]


# -- exhaustive enumeration --------------------------------------------------------------


def enumerate_graphs(d: DegreeSequence | Iterable[int], limit: int = 8,
                     max_count: int | None = None) -> list[Graph]:
    """All labelled simple graphs with degree sequence ``d``.

    Backtracks vertex by vertex: the lowest-index vertex with residual degree
    picks its remaining neighbours among later vertices. Output order is
    deterministic. ``max_count`` stops early (useful for existence checks).
    """
    entries = d.entries if isinstance(d, DegreeSequence) else np.asarray(list(d), dtype=np.int64)
    n = int(entries.size)
    if n > limit:
        raise ValueError(f"n={n} exceeds enumeration limit {limit}")
    residual = [int(x) for x in entries.tolist()]
    if sum(residual) % 2 or any(r < 0 for r in residual):
        return []
    found: list[Graph] = []
    edges: list[tuple[int, int]] = []

    def rec(start: int) -> bool:
        i = start
        while i < n and residual[i] == 0:
            i += 1
        if i == n:
            found.append(Graph.from_edges(n, np.array(edges, dtype=np.int64).reshape(-1, 2)))
            return max_count is not None and len(found) >= max_count
        need = residual[i]
        cands = [j for j in range(i + 1, n) if residual[j] > 0]
        if len(cands) < need:
            return False
        residual[i] = 0
        for chosen in combinations(cands, need):
            for j in chosen:
                residual[j] -= 1
                edges.append((i, j))
            stop = rec(i + 1)
            for j in chosen:
                residual[j] += 1
                edges.pop()
            if stop:
                residual[i] = need
                return True
        residual[i] = need
        return False

    rec(0)
    return found


@dataclass(frozen=True)
class GraphClassIndex:
    """Exact class cardinalities over all graphs with a degree sequence.

    Keys are tuples: the induced degrees of ``vertices`` in order, followed by
    an adjacency flag when ``adjacent`` was requested.
    """

    vertices: tuple
    adjacent: tuple | None
    classes: dict = field(default_factory=dict)
    total: int = 0

    def count(self, *key) -> int:
        return self.classes.get(tuple(key), 0)

    def probability(self, *key) -> float:
        return self.count(*key) / self.total if self.total else float("nan")

    def marginal(self, position: int) -> dict:
        out: dict = {}
        for key, c in self.classes.items():
            out[key[position]] = out.get(key[position], 0) + c
        return out

    def to_dict(self) -> dict:
        def label(key):
            parts = [f"d_S({v})={i}" for v, i in zip(self.vertices, key)]
            if self.adjacent is not None:
                parts.append(f"adj({self.adjacent[0]},{self.adjacent[1]})={int(key[-1])}")
            return ",".join(parts)

        return {
            "classes": {label(k): v for k, v in sorted(self.classes.items())},
            "total": self.total,
        }


def class_counts(d: DegreeSequence, S: VertexSubset, vertices: Iterable[int] = (),
                 adjacent: tuple[int, int] | None = None, limit: int = 8) -> GraphClassIndex:
    """Partition the enumeration of ``d`` by induced degree and adjacency.

    ``vertices`` and ``adjacent`` use 1-based labels. For ``vertices=(v,)``
    ``count(i)`` is |A_v^i|, the number of graphs where v has exactly i
    neighbours inside S.
    """
    verts = tuple(int(v) for v in vertices)
    in_S = np.zeros(d.n, dtype=bool)
    in_S[S.zero_based] = True
    classes: dict = {}
    graphs = enumerate_graphs(d, limit=limit)
    for G in graphs:
        key = tuple(int(in_S[G.neighbors(v - 1)].sum()) for v in verts)
        if adjacent is not None:
            key = key + (G.has_edge(adjacent[0] - 1, adjacent[1] - 1),)
        classes[key] = classes.get(key, 0) + 1
    return GraphClassIndex(vertices=verts, adjacent=tuple(adjacent) if adjacent else None,
                           classes=classes, total=len(graphs))
