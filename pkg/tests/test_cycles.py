import itertools

import networkx as nx
import pytest

from cdtgraphs.catalog import NAMES, expected_row
from cdtgraphs.cycles import (
    canonical_cycle,
    canonical_path,
    check_cycle_path_uh,
    check_sf_uh,
    cycles_of_length,
    cycles_through_path,
    girth_cycles,
    is_cycle_of,
    path_incidence,
    paths_of_order,
    windows,
)
from cdtgraphs.graph import GraphError, complete_graph, cycle_graph

from conftest import graph, group
from test_graph import to_nx


@pytest.mark.parametrize("name", NAMES)
def test_girth_cycle_count(name):
    row = expected_row(name)
    cycles = girth_cycles(graph(name))
    assert len(cycles) == row.eta == 2 ** (row.k - 2) * 3 * row.n // row.g
    assert cycles == sorted(set(cycles))
    assert all(canonical_cycle(c) == c and is_cycle_of(graph(name), c) for c in cycles)


@pytest.mark.parametrize("name", ["petersen", "heawood", "pappus", "desargues", "coxeter", "tutte"])
def test_girth_cycles_against_networkx(name):
    G = graph(name)
    g = expected_row(name).g
    ref = {canonical_cycle(c) for c in nx.simple_cycles(to_nx(G), length_bound=g) if len(c) == g}
    assert set(girth_cycles(G)) == ref


def test_triangle():
    assert girth_cycles(complete_graph(3)) == [(0, 1, 2)]


def test_cycles_of_length_k4_squares():
    assert len(cycles_of_length(complete_graph(4), 4)) == 3


class TestPaths:
    def test_petersen_two_paths(self):
        assert len(paths_of_order(graph("petersen"), 3)) == 30

    @pytest.mark.parametrize("name", NAMES)
    def test_edges(self, name):
        G = graph(name)
        assert paths_of_order(G, 2) == G.edges()

    @pytest.mark.parametrize("name, m", [("tutte", 5), ("coxeter", 4), ("foster", 3)])
    def test_cubic_count_and_bruteforce(self, name, m):
        G = graph(name)
        paths = paths_of_order(G, m)
        assert len(paths) == 3 * G.n * 2 ** (m - 2) // 2
        # brute force: extend every directed walk without repeats, then canonicalise
        walks = [[v] for v in range(G.n)]
        for _ in range(m - 1):
            walks = [w + [x] for w in walks for x in G.neighbors(w[-1]) if x not in w]
        assert sorted({canonical_path(w) for w in walks}) == paths

    def test_order_too_small(self):
        with pytest.raises(GraphError):
            paths_of_order(graph("k4"), 1)


class TestIncidence:
    def test_petersen_two_paths_on_two_pentagons(self):
        G = graph("petersen")
        cycles = girth_cycles(G)
        for p in paths_of_order(G, 3):
            assert len(cycles_through_path(G, cycles, p)) == 2

    def test_petersen_edges_on_four_pentagons(self):
        G = graph("petersen")
        cycles = girth_cycles(G)
        assert {len(cycles_through_path(G, cycles, e)) for e in G.edges()} == {12 * 5 // 15}

    def test_tutte_four_paths_on_two_octagons(self):
        G = graph("tutte")
        cycles = girth_cycles(G)
        inc = path_incidence(cycles, 5)
        assert {len(v) for v in inc.values()} == {2}
        assert len(inc) == len(paths_of_order(G, 5))

    def test_not_a_path(self):
        G = graph("petersen")
        with pytest.raises(GraphError):
            cycles_through_path(G, girth_cycles(G), (0, 2, 4))

    @pytest.mark.parametrize("name", NAMES)
    def test_incidence_counting_identity(self, name):
        G = graph(name)
        k = expected_row(name).k
        cycles = girth_cycles(G)
        arcs = sum(1 for c in cycles for _ in windows(c, k))
        assert arcs == len(cycles) * expected_row(name).g == 2 * len(paths_of_order(G, k))


class TestMultiplicities:
    @pytest.mark.parametrize("name", NAMES)
    def test_sf_report(self, name):
        row = expected_row(name)
        rep = check_sf_uh(graph(name), row.g, row.k)
        assert rep.passed
        assert rep.mu == [2 ** (i + 1) for i in range(row.k - 1)]
        assert rep.law_2_pow_i_plus_1 and not rep.law_2_pow_i

    def test_coxeter(self):
        assert check_sf_uh(graph("coxeter"), 7, 3).mu == [2, 4]

    def test_tutte(self):
        assert check_sf_uh(graph("tutte"), 8, 5).mu == [2, 4, 8, 16]

    def test_k4(self):
        rep = check_sf_uh(graph("k4"), 3, 2)
        assert rep.mu == [2] and rep.exact_sharing == [True]

    def test_mu_against_direct_count(self):
        # independent recount: for each edge of Heawood, hexagons containing both ends consecutively
        G = graph("heawood")
        cycles = girth_cycles(G)
        for u, v in G.edges():
            n = sum(1 for c in cycles if any({c[i], c[(i + 1) % 6]} == {u, v} for i in range(6)))
            assert n == 8

    def test_exact_meeting_reported(self):
        rep = check_sf_uh(graph("tutte"), 8, 5)
        assert rep.exact_meeting == [[1], [1], [2], [4]]


class TestUltrahomogeneity:
    @pytest.mark.parametrize("name", ["pappus", "foster", "coxeter", "k33"])
    def test_catalog(self, name):
        assert check_cycle_path_uh(graph(name), group(name)).passed

    def test_cycle_graph(self):
        from cdtgraphs.symmetry import automorphism_group

        C6 = cycle_graph(6)
        assert check_cycle_path_uh(C6, automorphism_group(C6), 3).passed


class TestCanonical:
    def test_examples(self):
        assert canonical_cycle((3, 1, 2)) == (1, 2, 3)
        assert canonical_cycle((1, 3, 2)) == (1, 2, 3)
        assert canonical_path((5, 1, 2)) == (2, 1, 5)

    def test_all_rotations_and_reflections(self):
        base = (0, 4, 2, 7, 5)
        forms = set()
        for i in range(5):
            rot = base[i:] + base[:i]
            forms.add(canonical_cycle(rot))
            forms.add(canonical_cycle(rot[::-1]))
        assert forms == {(0, 4, 2, 7, 5)}

    def test_windows(self):
        assert list(windows((0, 1, 2, 3), 3)) == [(0, (0, 1, 2)), (1, (1, 2, 3)), (2, (2, 3, 0)), (3, (3, 0, 1))]

    def test_idempotent_on_paths(self):
        for p in itertools.permutations(range(4)):
            assert canonical_path(canonical_path(p)) == canonical_path(p)
