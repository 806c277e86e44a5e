import networkx as nx
import pytest

from kmatching.graph import (
    INFINITE,
    DuplicateEdgeError,
    FamilySpec,
    Girth,
    Graph,
    GraphError,
    MalformedLineError,
    SelfLoopError,
    VertexRangeError,
    delete_vertex_pair,
    generate,
    girth,
    parse_edge_list,
    random_with_min_girth,
)

from conftest import fam, random_suite


class TestParse:
    def test_cycle(self):
        g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0")
        assert (g.n, g.m) == (4, 4)
        assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))

    def test_empty_graph(self):
        g = parse_edge_list("3 0")
        assert (g.n, g.m) == (3, 0)

    def test_crlf_and_blank_lines(self):
        g = parse_edge_list("3 2\r\n\r\n0 1\r\n2 1\r\n")
        assert g.edges == ((0, 1), (1, 2))

    @pytest.mark.parametrize(
        "text, exc, lineno",
        [
            ("2 1\n0 0", SelfLoopError, 2),
            ("3 2\n0 1\n1 0", DuplicateEdgeError, 3),
            ("3 1\n0 3", VertexRangeError, 2),
            ("3 1\n0 -1", VertexRangeError, 2),
            ("3 1\n0 x", MalformedLineError, 2),
            ("3 1\n0 1 2", MalformedLineError, 2),
            ("3", MalformedLineError, 1),
            ("", MalformedLineError, 1),
            ("3 2\n0 1", MalformedLineError, 3),
            ("3 1\n0 1\n1 2", MalformedLineError, 3),
        ],
    )
    def test_errors_name_line(self, text, exc, lineno):
        with pytest.raises(exc) as info:
            parse_edge_list(text)
        assert info.value.lineno == lineno
        assert f"line {lineno}" in str(info.value)

    def test_roundtrip(self, petersen):
        assert parse_edge_list(petersen.to_edge_list()) == petersen


class TestGraph:
    def test_rejects_self_loop_and_duplicates(self):
        with pytest.raises(GraphError):
            Graph(2, [(0, 0)])
        with pytest.raises(GraphError):
            Graph(2, [(0, 1), (1, 0)])
        with pytest.raises(GraphError):
            Graph(2, [(0, 2)])

    def test_handshake(self, small_graphs):
        for g in small_graphs:
            assert sum(g.degrees()) == 2 * g.m
            assert all(len(g.adjacency[u]) == g.degree(u) for u in range(g.n))

    def test_immutable(self, c4):
        with pytest.raises(AttributeError):
            c4.n = 5


class TestGenerate:
    def test_path(self):
        g = fam("path", 5)
        assert (g.n, g.m) == (5, 4)
        assert g.degrees() == [1, 2, 2, 2, 1]

    def test_sunlet_4(self):
        g = fam("sunlet", 4)
        assert (g.n, g.m) == (8, 8)
        assert sorted(g.degrees(), reverse=True) == [3, 3, 3, 3, 1, 1, 1, 1]

    def test_caterpillar_4_is_bare_path(self):
        assert fam("caterpillar", 4) == fam("path", 4)

    @pytest.mark.parametrize("k", range(4, 13))
    def test_caterpillar_shape(self, k):
        g = fam("caterpillar", k)
        assert (g.n, g.m) == (2 * k - 4, 2 * k - 5)
        # pendants hang off path positions 3..k-2 (0-based 2..k-3)
        assert g.degrees()[:k] == [1, 2] + [3] * (k - 4) + [2, 1]
        assert nx.is_tree(nx.Graph(list(g.edges)))

    @pytest.mark.parametrize("k", range(3, 10))
    def test_sunlet_shape(self, k):
        g = fam("sunlet", k)
        assert (g.n, g.m) == (2 * k, 2 * k)
        assert girth(g) == k

    def test_other_families(self):
        assert fam("star", 5).degrees() == [4, 1, 1, 1, 1]
        assert fam("complete", 5).m == 10
        kb = fam("complete_bipartite", 2, 3)
        assert (kb.n, kb.m) == (5, 6)
        assert girth(kb) == 4

    @pytest.mark.parametrize(
        "kind, params",
        [("path", (0,)), ("cycle", (2,)), ("caterpillar", (3,)), ("sunlet", (2,)),
         ("complete_bipartite", (0, 2)), ("complete_bipartite", (2,)), ("wheel", (5,))],
    )
    def test_bad_specs(self, kind, params):
        with pytest.raises(GraphError):
            FamilySpec(kind, params)


class TestGirth:
    def test_examples(self, k4):
        assert girth(fam("cycle", 5)) == 5
        assert girth(k4) == 3
        assert girth(fam("path", 6)) is not None
        assert girth(fam("path", 6)).is_infinite

    @pytest.mark.parametrize("n", range(3, 51))
    def test_cycles(self, n):
        assert girth(fam("cycle", n)) == n

    def test_trees_and_empty(self):
        assert girth(Graph(0)) == INFINITE
        assert girth(Graph(4)) == INFINITE
        assert girth(fam("star", 7)) == INFINITE
        assert girth(fam("caterpillar", 9)) == INFINITE

    def test_petersen(self, petersen):
        assert girth(petersen) == 5

    def test_against_networkx(self, small_graphs):
        for g in small_graphs:
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges)
            expected = nx.girth(h)
            got = girth(g)
            assert got.is_infinite if expected == float("inf") else got == expected

    def test_ordering(self):
        assert INFINITE > 10**9
        assert INFINITE >= 5
        assert not INFINITE < 3
        assert Girth(4) > 3 and Girth(4) >= 4 and not Girth(4) >= 5
        assert Girth(5) < INFINITE
        assert str(INFINITE) == "infinite" and str(Girth(7)) == "7"
        with pytest.raises(GraphError):
            Girth(2)


class TestDeleteVertexPair:
    def test_c4_adjacent(self, c4):
        h = delete_vertex_pair(c4, 0, 1)
        assert (h.n, h.edges) == (2, ((0, 1),))

    def test_p4_middle(self, p4):
        h = delete_vertex_pair(p4, 1, 2)
        assert (h.n, h.m) == (2, 0)

    def test_c5_adjacent_is_p3(self):
        assert delete_vertex_pair(fam("cycle", 5), 3, 4) == fam("path", 3)

    def test_order_preserving_relabel(self):
        g = Graph(6, [(0, 5), (1, 4), (2, 3), (3, 5)])
        h = delete_vertex_pair(g, 4, 1)
        # survivors 0, 2, 3, 5 become 0, 1, 2, 3
        assert h.edges == ((0, 3), (1, 2), (2, 3))

    def test_errors(self, c4):
        with pytest.raises(GraphError):
            delete_vertex_pair(c4, 1, 1)
        with pytest.raises(GraphError):
            delete_vertex_pair(c4, 0, 4)

    def test_edge_count(self, small_graphs):
        for g in small_graphs[:80]:
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    h = delete_vertex_pair(g, u, v)
                    assert h.m == g.m - g.degree(u) - g.degree(v) + g.has_edge(u, v)


class TestRandomWithMinGirth:
    def test_examples(self):
        g = random_with_min_girth(10, 11, 5, seed=7)
        assert girth(g) >= 5 and g.m <= 11
        assert random_with_min_girth(6, 0, 3, seed=1) == Graph(6)
        assert girth(random_with_min_girth(12, 12, 4, seed=3)) >= 4

    def test_deterministic(self):
        assert random_with_min_girth(15, 20, 4, 99) == random_with_min_girth(15, 20, 4, 99)

    def test_forest(self):
        for s in range(30):
            g = random_with_min_girth(12, 30, None, s)
            assert girth(g) == INFINITE
            assert g.m <= 11
        assert girth(random_with_min_girth(8, 20, INFINITE, 1)).is_infinite

    @pytest.mark.parametrize("gmin", [3, 4, 5, 6, 7])
    def test_girth_bound(self, gmin):
        for s in range(40):
            g = random_with_min_girth(14, 20, gmin, s)
            assert girth(g) >= gmin

    def test_reaches_target_when_easy(self):
        assert random_with_min_girth(12, 12, 4, seed=3).m == 12

    def test_bad_args(self):
        with pytest.raises(GraphError):
            random_with_min_girth(0, 1, 3, 0)
        with pytest.raises(GraphError):
            random_with_min_girth(5, 1, 2, 0)


def test_suite_helper_is_seeded():
    assert random_suite(5, 1) == random_suite(5, 1)
