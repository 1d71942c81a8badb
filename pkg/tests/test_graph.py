import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from factorlab.graph import (
    Graph, GraphFormatError, complete, complete_bipartite, components, copies, cycle,
    delete_vertices, disjoint_union, empty, induced, is_k_connected, join,
    neighborhood_union, odd_components, parse_edge_list, parse_graph6, parse_graphs, path, star,
    to_edge_list, to_graph6,
)
from factorlab.criteria import gen_apex_cliques

import oracles


@st.composite
def graphs(draw, max_order=8):
    order = draw(st.integers(0, max_order))
    pairs = oracles.all_pairs(order)
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(order, [e for e, keep in zip(pairs, chosen) if keep])


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.order))
    H.add_edges_from(G.edges)
    return H


class TestConstruction:
    def test_edges_are_normalised_and_sorted(self):
        G = Graph(4, [(3, 1), (0, 2), (1, 3)])
        assert G.edges == ((0, 2), (1, 3))
        assert G.size == 2
        assert G.degrees() == (1, 1, 1, 1)

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 0)]])
    def test_bad_edges_rejected(self, edges):
        with pytest.raises(ValueError):
            Graph(3, edges)

    def test_equality_and_hash(self):
        assert Graph(3, [(0, 1)]) == Graph(3, [(1, 0)])
        assert len({Graph(3, [(0, 1)]), Graph(3, [(1, 0)])}) == 1
        assert Graph(3, [(0, 1)]) != Graph(4, [(0, 1)])


class TestGraph6:
    def test_single_edge(self):
        assert parse_graph6("A_") == complete(2)

    def test_empty_five_vertices(self):
        G = parse_graph6("D??")
        assert G.order == 5 and G.size == 0

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<A_") == complete(2)

    def test_round_trip_against_independent_encoder(self):
        rng = random.Random(20240611)
        for _ in range(500):
            order = rng.randint(0, 12)
            p = rng.random()
            edges = [e for e in oracles.all_pairs(order) if rng.random() < p]
            G = Graph(order, edges)
            text = oracles.graph6_encode(order, edges)
            assert to_graph6(G) == text
            assert parse_graph6(text) == G
            assert to_graph6(parse_graph6(text)) == text

    @pytest.mark.parametrize("order", [62, 63, 64, 100])
    def test_long_order_field(self, order):
        G = Graph(order, [(0, order - 1), (1, 2)])
        text = to_graph6(G)
        assert text == oracles.graph6_encode(order, G.edges)
        assert parse_graph6(text) == G

    @pytest.mark.parametrize("text, offset", [
        ("A ", 1),           # byte below 63
        ("D?", 2),           # bit field needs two bytes
        ("A_?", 2),          # one byte too many
        ("~?", 2),           # order field cut short
        ("Aa", 1),           # padding bit set
        (">>graph6<<D?", 12),
    ])
    def test_errors_name_byte_offset(self, text, offset):
        with pytest.raises(GraphFormatError) as info:
            parse_graph6(text)
        assert info.value.offset == offset
        assert str(offset) in str(info.value)

    @given(graphs(max_order=14))
    def test_round_trip_property(self, G):
        assert parse_graph6(to_graph6(G)) == G


class TestEdgeList:
    def test_parse_with_comments(self):
        text = "# a path\n3 2\n0 1\n\n1 2  # second edge\n"
        assert parse_edge_list(text) == path(3)

    def test_round_trip(self):
        G = cycle(5)
        assert parse_edge_list(to_edge_list(G)) == G

    @pytest.mark.parametrize("text", ["", "3 2\n0 1\n", "2 1\n0 x\n", "2 1\n0 2\n", "2 1\n0 1 2\n"])
    def test_malformed(self, text):
        with pytest.raises(GraphFormatError):
            parse_edge_list(text)

    def test_auto_detect(self):
        assert parse_graphs("2 1\n0 1\n") == [complete(2)]
        assert parse_graphs("A_\nB?\n") == [complete(2), empty(3)]


class TestComponents:
    def test_examples(self):
        assert components(complete(2)) == [[0, 1]]
        assert components(disjoint_union(complete(3), complete(2))) == [[0, 1, 2], [3, 4]]
        apex = gen_apex_cliques(1)
        assert apex.order == 10 and len(components(apex)) == 1

    def test_odd_components_examples(self):
        apex = gen_apex_cliques(1)
        assert odd_components(apex, [0])[0] == 3
        assert odd_components(apex, range(10)) == (0, [])
        assert odd_components(complete_bipartite(2, 5), [0, 1])[0] == 5

    def test_out_of_range_vertex(self):
        with pytest.raises(ValueError):
            odd_components(complete(3), [3])
        with pytest.raises(ValueError):
            induced(complete(3), [0, 7])

    @settings(max_examples=200)
    @given(graphs())
    def test_partition_matches_networkx(self, G):
        comps = components(G)
        assert sorted(v for c in comps for v in c) == list(range(G.order))
        assert [c[0] for c in comps] == sorted(c[0] for c in comps)
        assert sorted(map(sorted, nx.connected_components(to_nx(G)))) == sorted(comps)

    @settings(max_examples=200)
    @given(graphs(), st.data())
    def test_odd_plus_even_is_all(self, G, data):
        S = data.draw(st.sets(st.integers(0, max(G.order - 1, 0)), max_size=G.order)) if G.order else set()
        count, odd = odd_components(G, S)
        rest, _ = delete_vertices(G, S)
        comps = components(rest)
        even = sum(1 for c in comps if len(c) % 2 == 0)
        assert count == len(odd) and count + even == len(comps)
        assert count == oracles.odd_component_count(G.order, G.edges, S)


class TestSubgraphs:
    def test_induced_complete(self):
        sub, label_map = induced(complete(4), [0, 2, 3])
        assert sub == complete(3)
        assert label_map == (0, 2, 3)

    def test_delete_nothing(self):
        G = cycle(5)
        assert delete_vertices(G, [])[0] == G

    def test_delete_star_center(self):
        rest, label_map = delete_vertices(star(3), [0])
        assert rest == empty(3) and label_map == (1, 2, 3)


class TestConstructors:
    def test_join_gives_star(self):
        assert join(complete(1), copies(complete(1), 3)) == star(3)
        assert join(complete(1), empty(3)) == complete_bipartite(1, 3)

    def test_complete_bipartite(self):
        G = complete_bipartite(2, 5)
        assert (G.order, G.size) == (7, 10)

    @pytest.mark.parametrize("t, m", [(1, 1), (3, 3), (2, 4)])
    def test_apex_degree(self, t, m):
        G = join(complete(1), copies(complete(m), t))
        assert G.degree(0) == t * m


class TestConnectivity:
    def test_examples(self):
        assert is_k_connected(complete(4), 3)
        assert not is_k_connected(path(3), 2)
        assert is_k_connected(join(complete(3), empty(7)), 3)

    @settings(max_examples=100)
    @given(graphs(max_order=7), st.integers(1, 4))
    def test_matches_networkx_and_is_monotone(self, G, k):
        expected = G.order > k and nx.node_connectivity(to_nx(G)) >= k
        assert is_k_connected(G, k) == expected
        if is_k_connected(G, k):
            assert all(is_k_connected(G, j) for j in range(1, k))

    def test_cap(self):
        from factorlab.optimizer import BudgetError
        with pytest.raises(BudgetError):
            is_k_connected(complete(12), 9)


class TestNeighborhoodUnion:
    def test_examples(self):
        assert neighborhood_union(star(3), 1, 2) == {0}
        assert len(neighborhood_union(complete(3), 0, 1)) == 3
        assert neighborhood_union(cycle(4), 0, 2) == {1, 3}

    def test_same_vertex(self):
        with pytest.raises(ValueError):
            neighborhood_union(complete(3), 1, 1)
