"""Simple graphs in CSR form, induced subgraphs and connected components.

Vertices are 0-based internally; edge-list files use 1-based labels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numba
import numpy as np

from .core import DegreeSequence, VertexSubset


class GraphError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph with sorted neighbour lists.

    ``indptr``/``nbrs`` hold the adjacency in CSR layout; ``edges`` is the
    canonical ``(m, 2)`` array with ``u < v``, lexicographically sorted.
    """

    n: int
    indptr: np.ndarray
    nbrs: np.ndarray
    edges: np.ndarray

    @classmethod
    def from_edges(cls, n: int, edges, validate: bool = True) -> "Graph":
        e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if e.size and (e.min() < 0 or e.max() >= n):
            raise GraphError("edge endpoint out of range")
        u = np.minimum(e[:, 0], e[:, 1])
        v = np.maximum(e[:, 0], e[:, 1])
        if validate:
            if np.any(u == v):
                raise GraphError("self-loop")
        keys = u * n + v
        order = np.argsort(keys, kind="stable")
        keys = keys[order]
        if validate and keys.size and np.any(keys[1:] == keys[:-1]):
            raise GraphError("repeated edge")
        canon = np.stack([u[order], v[order]], axis=1)
        # symmetric CSR
        src = np.concatenate([canon[:, 0], canon[:, 1]])
        dst = np.concatenate([canon[:, 1], canon[:, 0]])
        o = np.lexsort((dst, src))
        src, dst = src[o], dst[o]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        for arr in (indptr, dst, canon):
            arr.setflags(write=False)
        return cls(n=n, indptr=indptr, nbrs=dst, edges=canon)

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls.from_edges(n, np.empty((0, 2), dtype=np.int64))

    @property
    def m(self) -> int:
        return int(self.edges.shape[0])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        return self.nbrs[self.indptr[v]:self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return bool(i < row.size and row[i] == v)

    def edge_set(self) -> frozenset:
        return frozenset(map(tuple, self.edges.tolist()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def induced_subgraph(G: Graph, S: VertexSubset | np.ndarray) -> Graph:
    """Subgraph on ``S``, relabelled 0..|S|-1 in S's sorted order.

    ``S`` is a :class:`VertexSubset` (1-based) or an array of 0-based ids.
    """
    idx = S.zero_based if isinstance(S, VertexSubset) else np.unique(np.asarray(S, dtype=np.int64))
    if idx.size and (idx[0] < 0 or idx[-1] >= G.n):
        raise GraphError("subset index out of range")
    relabel = np.full(G.n, -1, dtype=np.int64)
    relabel[idx] = np.arange(idx.size)
    a = relabel[G.edges[:, 0]]
    b = relabel[G.edges[:, 1]]
    keep = (a >= 0) & (b >= 0)
    return Graph.from_edges(int(idx.size), np.stack([a[keep], b[keep]], axis=1), validate=False)


def degree_sequence_of(G: Graph) -> DegreeSequence:
    return DegreeSequence.permissive(G.degrees)


@dataclass(frozen=True)
class ComponentSummary:
    componentSizes: tuple
    largest: int
    nonIsolated: int

    def to_dict(self) -> dict:
        return {
            "componentSizes": list(self.componentSizes),
            "largest": self.largest,
            "nonIsolated": self.nonIsolated,
        }


@numba.njit(cache=True)
def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


@numba.njit(cache=True)
def _union_find_labels(n, eu, ev):
    parent = np.arange(n)
    size = np.ones(n, dtype=np.int64)
    for k in range(eu.shape[0]):
        a = _find(parent, eu[k])
        b = _find(parent, ev[k])
        if a == b:
            continue
        if size[a] < size[b]:
            a, b = b, a
        parent[b] = a
        size[a] += size[b]
    for x in range(n):
        parent[x] = _find(parent, x)
    return parent


def component_labels(G: Graph) -> np.ndarray:
    """Root label of every vertex (union by size, path compression)."""
    return _union_find_labels(G.n, G.edges[:, 0].copy(), G.edges[:, 1].copy())


def _summarise(labels: np.ndarray, degrees: np.ndarray) -> ComponentSummary:
    sizes = np.bincount(labels, minlength=labels.size) if labels.size else np.zeros(0, np.int64)
    sizes = np.sort(sizes[sizes > 0])[::-1]
    return ComponentSummary(
        componentSizes=tuple(int(x) for x in sizes),
        largest=int(sizes[0]) if sizes.size else 0,
        nonIsolated=int(np.count_nonzero(degrees)),
    )


def components(G: Graph) -> ComponentSummary:
    return _summarise(component_labels(G), G.degrees)


def components_bfs(G: Graph) -> ComponentSummary:
    """Breadth-first reference implementation, kept for differential tests."""
    label = np.full(G.n, -1, dtype=np.int64)
    for s in range(G.n):
        if label[s] >= 0:
            continue
        label[s] = s
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u).tolist():
                if label[w] < 0:
                    label[w] = s
                    queue.append(w)
    return _summarise(label, G.degrees)


# -- edge-list files ----------------------------------------------------------


def format_edge_list(G: Graph) -> str:
    lines = [f"{u + 1} {v + 1}" for u, v in G.edges.tolist()]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Read 1-based ``u v`` pairs, one per line, in either orientation."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex") from None
        if u < 1 or v < 1:
            raise GraphError(f"line {lineno}: vertices are 1-based")
        pairs.append((u - 1, v - 1))
    e = np.array(pairs, dtype=np.int64).reshape(-1, 2)
    if n is None:
        n = int(e.max()) + 1 if e.size else 0
    return Graph.from_edges(n, e)
