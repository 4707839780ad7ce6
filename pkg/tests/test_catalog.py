import itertools

import networkx as nx
import pytest

from cdtgraphs.catalog import (
    NAMES,
    TABLE,
    LabeledVertexScheme,
    NoFixture,
    NotationError,
    UnknownGraph,
    build,
    build_labeled,
    expected_row,
    fano_plane,
    fixture_listing,
    fixture_oac,
    obstruction_chain,
    parse_listing,
)
from cdtgraphs.catalog.fixtures import OAC_FIXTURES
from cdtgraphs.configurations import find_duality, is_duality, is_self_dual
from cdtgraphs.cycles import canonical_cycle, girth_cycles
from cdtgraphs.graph import is_connected
from cdtgraphs.oac import validate_oac
from cdtgraphs.planarity import is_planar, planarity
from cdtgraphs.symmetry import is_vertex_transitive

from conftest import graph, group
from test_graph import to_nx


class TestBuilds:
    @pytest.mark.parametrize("name", NAMES)
    def test_cubic_connected_vertex_transitive(self, name):
        G = graph(name)
        assert G.n == expected_row(name).n
        assert G.is_regular(3) and is_connected(G)
        assert is_vertex_transitive(G, group(name))

    def test_heawood(self):
        G = build("heawood")
        assert (G.n, G.edge_count) == (14, 21)

    def test_coxeter_centres(self):
        cg = build_labeled("coxeter")
        nbrs = {cg.graph.label(w) for w in cg.graph.neighbors(cg.v("z_1"))}
        assert nbrs == {"u_1", "v_1", "t_1"}

    def test_k4(self):
        G = build("k4")
        assert G.edges() == list(itertools.combinations(range(4), 2))

    def test_aliases_and_unknown(self):
        assert build("Tutte-8-cage") == build("tutte")
        with pytest.raises(UnknownGraph):
            build("nauru")

    def test_dodecahedral_covers_petersen(self):
        cg, pet = build_labeled("dodecahedral"), build_labeled("petersen")
        proj = {}
        for v in range(cg.graph.n):
            prefix, sub = cg.graph.label(v).split("_")
            proj[v] = pet.v(("u_" if prefix in "ac" else "v_") + sub)
        for v in range(cg.graph.n):
            images = sorted(proj[w] for w in cg.graph.neighbors(v))
            assert images == sorted(pet.graph.neighbors(proj[v]))
        assert sorted(proj.values()) == sorted(list(range(10)) * 2)

    @pytest.mark.parametrize("name, reference", [
        ("k4", lambda: nx.complete_graph(4)),
        ("k33", lambda: nx.complete_bipartite_graph(3, 3)),
        ("q3", lambda: nx.hypercube_graph(3)),
        ("petersen", nx.petersen_graph),
        ("heawood", nx.heawood_graph),
        ("pappus", nx.pappus_graph),
        ("dodecahedral", nx.dodecahedral_graph),
        ("desargues", nx.desargues_graph),
        ("tutte", lambda: nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5)),
        ("foster", lambda: nx.LCF_graph(90, [17, -9, 37, -37, 9, -17], 15)),
    ])
    def test_matches_networkx_reference(self, name, reference):
        assert nx.is_isomorphic(to_nx(graph(name)), reference())


class TestTable:
    def test_foster_row(self):
        r = expected_row("foster")
        assert (r.n, r.d, r.g, r.k, r.eta, r.a, r.b, r.h, r.kappa) == (90, 8, 10, 5, 216, 4320, True, True, 0)

    def test_biggs_smith_row(self):
        r = expected_row("biggs-smith")
        assert (r.n, r.d, r.g, r.k, r.eta, r.a, r.b, r.h, r.kappa) == (102, 7, 9, 4, 136, 2448, False, True, 3)

    def test_k33_row(self):
        r = expected_row("k33")
        assert (r.n, r.d, r.g, r.k, r.eta, r.a, r.b, r.h, r.kappa) == (6, 2, 4, 3, 9, 72, True, True, 2)

    @pytest.mark.parametrize("name", NAMES)
    def test_eta_identity(self, name):
        r = TABLE[name]
        assert r.eta * r.g == 3 * r.n * 2 ** (r.k - 2)
        assert r.eta == r.eta_formula()

    @pytest.mark.parametrize("name", NAMES)
    def test_kappa_rules(self, name):
        r = TABLE[name]
        if r.kappa == 2:
            assert r.g == 2 * (r.k - 1)
        if r.kappa == 3:
            assert r.g > 2 * (r.k - 1)

    def test_unknown_row(self):
        with pytest.raises(UnknownGraph):
            expected_row("nope")


class TestFixtures:
    def test_k4_listing(self):
        cycles = [c for _, c in fixture_listing("k4")]
        assert cycles == [(1, 2, 3), (2, 1, 0), (3, 0, 1), (0, 3, 2)]

    def test_q3_listing(self):
        cycles = [c for _, c in fixture_listing("q3")]
        assert cycles[0] == (0, 1, 3, 2) and len(cycles) == 6

    def test_tutte_size(self):
        assert len(fixture_oac("tutte")) == 90

    def test_pappus_contains_f2(self):
        listing = dict(fixture_listing("pappus"))
        # digit i (18) wraps to vertex 0 on the 18-cycle
        assert listing["F_2"] == (6, 1, 0, 13, 12, 7)

    @pytest.mark.parametrize("name", OAC_FIXTURES)
    def test_fixture_covers_girth_cycles(self, name):
        oac = fixture_oac(name)
        assert len(oac) == expected_row(name).eta
        assert sorted(oac.underlying) == girth_cycles(graph(name))

    @pytest.mark.parametrize("name", [n for n in OAC_FIXTURES if n != "pappus"])
    def test_fixture_is_valid(self, name):
        assert validate_oac(graph(name), fixture_oac(name), expected_row(name).k)

    @pytest.mark.parametrize("name", ["coxeter", "tutte"])
    def test_reversed_cycles_matter(self, name):
        assert not validate_oac(graph(name), fixture_oac(name, as_printed=True), expected_row(name).k)

    def test_no_listing_for_obstructed_graphs(self):
        for name in ("petersen", "heawood", "foster", "biggs-smith"):
            with pytest.raises(NoFixture):
                fixture_oac(name)

    def test_obstruction_chains_exist(self):
        assert len(obstruction_chain("petersen")) == 4
        with pytest.raises(NoFixture):
            obstruction_chain("k4")


class TestNotation:
    def test_digits_round_trip(self):
        s = LabeledVertexScheme("digits", 18)
        assert s.parse_cycle("(61hdc7)") == (6, 1, 17, 13, 12, 7)
        assert s.format_cycle(s.parse_cycle("(61hdc7)")) == "(61hdc7)"

    def test_letters_and_for_block(self):
        s = LabeledVertexScheme("letters", 10, prefixes=("u", "v"), modulus=5)
        text = "@for x in Z5\nA^x = (u_x u_{x+1} v_{x+1} v_x)\n@end\n"
        out = parse_listing(text, s)
        assert len(out) == 5
        assert out[4] == ("A^4", (4, 0, 5, 9))

    def test_reverse_directive(self):
        s = LabeledVertexScheme("integers", 4)
        text = "@reverse B\nA = (0 1 2)\nB = (0 1 3)\n"
        assert parse_listing(text, s)[1][1] == (3, 1, 0)
        assert parse_listing(text, s, as_printed=True)[1][1] == (0, 1, 3)

    def test_reverse_unknown_name(self):
        with pytest.raises(NotationError):
            parse_listing("@reverse Z\n(0 1 2)\n", LabeledVertexScheme("integers", 3))

    @pytest.mark.parametrize("text", ["(0 1 9)", "@end", "@for x in Z3\n(0 1 2)", "0 1 2"])
    def test_errors(self, text):
        with pytest.raises(NotationError):
            parse_listing(text, LabeledVertexScheme("integers", 3))

    def test_blocks_scheme_round_trip(self):
        s = LabeledVertexScheme("blocks", 30, modulus=5, block_size=6)
        for v in range(30):
            assert s.index(s.name(v)) == v


class TestFano:
    def test_lines_through_point_one(self):
        F = fano_plane()
        p = F.points.index("1")
        lines = {"".join(sorted(F.points[q] for q in F.lines[i])) for i in F.lines_through(p)}
        assert lines == {"124", "156", "137"}

    def test_two_points_one_line(self):
        F = fano_plane()
        for a, b in itertools.combinations(range(7), 2):
            assert sum(1 for line in F.lines if a in line and b in line) == 1

    def test_self_dual(self):
        F = fano_plane()
        d = find_duality(F)
        assert d is not None and is_duality(F, *d)
        assert is_self_dual(F)


class TestPlanarity:
    @pytest.mark.parametrize("name, planar", [("k4", True), ("q3", True), ("dodecahedral", True),
                                              ("k33", False), ("petersen", False), ("coxeter", False)])
    def test_catalog(self, name, planar):
        G = graph(name)
        assert is_planar(G) == planar
        assert G.edge_count <= 3 * G.n - 6 or not planar

    def test_tree(self):
        from cdtgraphs.graph import make_graph

        assert is_planar(make_graph(5, [(0, 1), (0, 2), (1, 3), (1, 4)]))

    def test_kuratowski_witness(self):
        res = planarity(graph("petersen"))
        assert not res.planar and res.kuratowski_kind in ("K5", "K3,3")
        assert all(graph("petersen").has_edge(u, v) for u, v in res.kuratowski_edges)

    def test_planar_faces_satisfy_euler(self):
        res = planarity(graph("dodecahedral"))
        assert 20 - 30 + len(res.faces) == 2
        assert sorted(len(f) for f in res.faces) == [5] * 12

    def test_face_cycles_are_girth_cycles(self):
        res = planarity(graph("q3"))
        assert sorted(canonical_cycle(f) for f in res.faces) == girth_cycles(graph("q3"))
