import itertools

import networkx as nx
import pytest

from cdtgraphs.graph import (
    GraphError,
    chromatic_number,
    clique_number,
    cliques_of_size,
    complement,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    diameter,
    find_coloring,
    find_hamiltonian_cycle,
    girth,
    graph_from_json,
    graph_metrics,
    is_bipartite,
    line_graph,
    make_graph,
    power,
)

from conftest import graph


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


class TestMakeGraph:
    def test_k4_degrees(self):
        G = make_graph(4, list(itertools.combinations(range(4), 2)))
        assert G.degrees() == [3, 3, 3, 3]

    def test_q3_pairs_give_cubic_graph(self):
        pairs = [(int(p[0]), int(p[1])) for p in "01 23 45 67 02 13 46 57 04 15 26 37".split()]
        G = make_graph(8, pairs)
        assert G.n == 8 and G.is_regular(3)

    def test_duplicate_edge_rejected_in_simple_mode(self):
        with pytest.raises(GraphError):
            make_graph(3, [(0, 1), (0, 1)])

    def test_duplicate_edge_counted_in_multigraph_mode(self):
        G = make_graph(3, [(0, 1), (1, 0), (1, 2)], multigraph=True)
        assert G.mult(0, 1) == 2 and G.edge_count == 3 and not G.is_simple

    @pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
    def test_bad_pairs(self, edges):
        with pytest.raises(GraphError):
            make_graph(3, edges)

    def test_json_round_trip(self):
        G = graph("petersen")
        assert graph_from_json(G.to_json()) == G

    def test_dot_mentions_every_edge(self):
        G = complete_graph(4)
        assert G.to_dot().count("--") == 6


class TestMetrics:
    def test_heawood(self):
        m = graph_metrics(graph("heawood"))
        assert (m.diameter, m.girth, m.bipartite, m.hamiltonian) == (3, 6, True, True)

    def test_coxeter(self):
        m = graph_metrics(graph("coxeter"), hamiltonian_budget=None)
        assert (m.diameter, m.girth, m.bipartite, m.hamiltonian) == (4, 7, False, False)

    def test_c5(self):
        m = graph_metrics(cycle_graph(5))
        assert (m.diameter, m.girth, m.bipartite, m.hamiltonian) == (2, 5, False, True)

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            graph_metrics(make_graph(4, [(0, 1), (2, 3)]))

    @pytest.mark.parametrize("name", ["petersen", "desargues", "tutte", "foster"])
    def test_against_networkx(self, name):
        G = graph(name)
        H = to_nx(G)
        assert diameter(G) == nx.diameter(H)
        assert girth(G) == nx.girth(H)
        assert is_bipartite(G) == nx.is_bipartite(H)

    def test_hamiltonian_cycle_is_a_cycle(self):
        G = graph("biggs-smith")
        cyc = find_hamiltonian_cycle(G, budget=None)
        assert sorted(cyc) == list(range(G.n))
        assert all(G.has_edge(cyc[i], cyc[(i + 1) % G.n]) for i in range(G.n))

    def test_petersen_not_hamiltonian(self):
        assert find_hamiltonian_cycle(graph("petersen"), budget=None) is None


class TestDerived:
    def test_power_of_k33_is_two_triangles(self):
        P = power(complete_bipartite_graph(3, 3), 2)
        expected = {(a, b) for part in ((0, 1, 2), (3, 4, 5)) for a, b in itertools.combinations(part, 2)}
        assert set(P.edges()) == expected

    def test_power_against_networkx_distances(self):
        G = graph("petersen")
        dist = dict(nx.all_pairs_shortest_path_length(to_nx(G)))
        P = power(G, 2)
        assert set(P.edges()) == {(u, v) for u in range(G.n) for v in range(u + 1, G.n) if dist[u][v] == 2}

    def test_power_beyond_diameter(self):
        with pytest.raises(GraphError):
            power(graph("petersen"), 3)

    def test_line_graph_of_k5(self):
        L = line_graph(complete_graph(5))
        assert L.n == 10 and L.is_regular(6)
        assert nx.is_isomorphic(to_nx(L), nx.line_graph(nx.complete_graph(5)))

    def test_complement_of_empty_is_complete(self):
        assert complement(make_graph(5, [])) == complete_graph(5)


class TestColouringAndCliques:
    @pytest.mark.parametrize("G, chi", [(complete_graph(4), 4), (cycle_graph(5), 3),
                                        (complete_bipartite_graph(3, 3), 2)])
    def test_small_cases(self, G, chi):
        assert chromatic_number(G) == chi

    def test_petersen(self):
        G = graph("petersen")
        assert chromatic_number(G) == 3
        col = find_coloring(G, 3)
        assert all(col[u] != col[v] for u, v in G.edges())
        assert find_coloring(G, 2) is None

    def test_scale_guard(self):
        with pytest.raises(GraphError):
            chromatic_number(graph("foster"))

    def test_line_graph_k5_cliques(self):
        L = line_graph(complete_graph(5))
        assert len(cliques_of_size(L, 4)) == 5
        assert len(cliques_of_size(L, 3)) == 30
        assert len(cliques_of_size(L, 3)) == sum(
            1 for c in itertools.combinations(range(10), 3) if all(L.has_edge(a, b) for a, b in itertools.combinations(c, 2)))

    def test_triangle_free(self):
        assert cliques_of_size(cycle_graph(6), 3) == []

    def test_clique_number_bounds_chromatic(self):
        for G in (complete_graph(5), cycle_graph(7), graph("petersen")):
            assert chromatic_number(G) >= clique_number(G)
