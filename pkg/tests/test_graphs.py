import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inducedseq.core import DegreeSequence, VertexSubset
from inducedseq.graphs import (
    Graph,
    GraphError,
    components,
    components_bfs,
    degree_sequence_of,
    format_edge_list,
    induced_subgraph,
    parse_edge_list,
)

TRIANGLE = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@st.composite
def graphs(draw, max_n=30):
    n = draw(st.integers(0, max_n))
    if n < 2:
        return Graph.empty(n)
    pairs = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                         .filter(lambda t: t[0] != t[1]).map(lambda t: (min(t), max(t))),
                         max_size=3 * n))
    return Graph.from_edges(n, sorted(pairs))


def _subset(G, picks):
    return np.array(sorted({p % G.n for p in picks}), dtype=np.int64) if G.n else np.array([], np.int64)


class TestGraph:
    def test_rejects_loops_and_repeats(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 0)])
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 1), (1, 0)])
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 2)])

    def test_adjacency(self):
        assert TRIANGLE.m == 3
        assert TRIANGLE.neighbors(1).tolist() == [0, 2]
        assert C4.has_edge(3, 0) and not C4.has_edge(0, 2)

    @given(graphs())
    def test_invariants(self, G):
        deg = G.degrees
        assert deg.sum() == 2 * G.m
        for v in range(G.n):
            row = G.neighbors(v)
            assert v not in row
            assert np.all(np.diff(row) > 0)
            for w in row:
                assert G.has_edge(int(w), v)


class TestInduced:
    def test_triangle_pair(self):
        H = induced_subgraph(TRIANGLE, [0, 1])
        assert (H.n, H.m) == (2, 1)

    def test_empty_subset(self):
        H = induced_subgraph(C4, [])
        assert (H.n, H.m) == (0, 0)

    def test_opposite_cycle_vertices(self):
        H = induced_subgraph(C4, [0, 2])
        assert (H.n, H.m) == (2, 0)

    def test_vertex_subset_is_one_based(self):
        d = DegreeSequence([2, 2, 2])
        H = induced_subgraph(TRIANGLE, VertexSubset.of(d, [1, 2]))
        assert H.m == 1

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            induced_subgraph(TRIANGLE, [3])

    @given(graphs())
    def test_whole_vertex_set(self, G):
        assert degree_sequence_of(induced_subgraph(G, np.arange(G.n))) == degree_sequence_of(G)

    @given(graphs(), st.lists(st.integers(0, 100), max_size=20))
    def test_handshake(self, G, picks):
        H = induced_subgraph(G, _subset(G, picks))
        assert H.degrees.sum() % 2 == 0
        assert H.degrees.sum() == 2 * H.m

    @given(graphs(), st.lists(st.integers(0, 100), max_size=20))
    def test_edges_match_definition(self, G, picks):
        S = _subset(G, picks).tolist()
        H = induced_subgraph(G, S)
        expected = {(i, j) for i, u in enumerate(S) for j, v in enumerate(S) if i < j and G.has_edge(u, v)}
        assert set(map(tuple, H.edges.tolist())) == expected


class TestDegreeSequence:
    def test_examples(self):
        assert degree_sequence_of(TRIANGLE).entries.tolist() == [2, 2, 2]
        assert degree_sequence_of(Graph.from_edges(3, [(1, 2)])).entries.tolist() == [0, 1, 1]
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert degree_sequence_of(star).entries.tolist() == [1, 1, 1, 3]


class TestComponents:
    def test_examples(self):
        c = components(TRIANGLE)
        assert (c.componentSizes, c.largest, c.nonIsolated) == ((3,), 3, 3)
        assert components(Graph.from_edges(4, [(0, 1), (2, 3)])).componentSizes == (2, 2)
        c = components(Graph.from_edges(3, [(0, 1)]))
        assert (c.componentSizes, c.nonIsolated) == ((2, 1), 2)

    @settings(max_examples=200)
    @given(graphs(max_n=60))
    def test_union_find_matches_bfs(self, G):
        a, b = components(G), components_bfs(G)
        assert a == b
        assert sum(a.componentSizes) == G.n
        assert list(a.componentSizes) == sorted(a.componentSizes, reverse=True)
        assert a.nonIsolated <= G.n

    def test_large_random(self, rng):
        n = 5000
        e = rng.integers(0, n, size=(4000, 2))
        e = e[e[:, 0] != e[:, 1]]
        e = np.unique(np.sort(e, axis=1), axis=0)
        G = Graph.from_edges(n, e)
        assert components(G) == components_bfs(G)


class TestEdgeList:
    def test_round_trip(self):
        text = format_edge_list(C4)
        assert text.splitlines()[0] == "1 2"
        assert parse_edge_list(text, 4) == C4

    def test_either_orientation(self):
        assert parse_edge_list("2 1\n3 2\n") == parse_edge_list("1 2\n2 3\n")

    @pytest.mark.parametrize("bad", ["1\n", "0 1\n", "a b\n", "1 1\n"])
    def test_bad_lines(self, bad):
        with pytest.raises(GraphError):
            parse_edge_list(bad)
