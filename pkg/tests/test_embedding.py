import networkx as nx
import pytest

from cdtgraphs.analysis import dual_triangles, klein_report
from cdtgraphs.embedding import (
    EmbeddingError,
    FaceSet,
    dual_graph,
    flag_graph_bipartite,
    flag_involutions,
    flags,
    orient_faces,
    petrie_lengths,
    verify_polygonal_embedding,
)
from cdtgraphs.graph import complete_graph, find_coloring, make_graph

from conftest import fixture, graph, zipped
from test_graph import to_nx

HEMICUBE = [(0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3)]


def surface(name):
    return FaceSet.from_walks(graph(name), fixture(name).cycles)


class TestPolyhedra:
    @pytest.mark.parametrize("name, faces", [("k4", 4), ("q3", 6), ("dodecahedral", 12)])
    def test_sphere(self, name, faces):
        rep = verify_polygonal_embedding(surface(name))
        assert (rep.faces, rep.euler_characteristic, rep.orientable, rep.genus) == (faces, 2, True, 0)

    @pytest.mark.parametrize("name, petrie", [("k4", [4, 4, 4]), ("q3", [6] * 4), ("dodecahedral", [10] * 6)])
    def test_petrie_polygons(self, name, petrie):
        assert petrie_lengths(surface(name)) == petrie

    def test_tetrahedron_dual_is_k4(self):
        assert nx.is_isomorphic(to_nx(dual_graph(surface("k4"))), nx.complete_graph(4))

    def test_cube_dual_is_octahedron(self):
        assert nx.is_isomorphic(to_nx(dual_graph(surface("q3"))), nx.octahedral_graph())


class TestOrientability:
    def test_hemicube_is_projective(self):
        fs = FaceSet.from_walks(complete_graph(4), HEMICUBE)
        rep = verify_polygonal_embedding(fs)
        assert (rep.euler_characteristic, rep.orientable, rep.genus) == (1, False, None)
        assert not flag_graph_bipartite(fs)

    @pytest.mark.parametrize("name", ["k4", "q3", "dodecahedral"])
    def test_two_routes_agree(self, name):
        fs = surface(name)
        assert (orient_faces(fs) is not None) == flag_graph_bipartite(fs)

    def test_two_routes_agree_on_klein_map(self):
        fs = FaceSet.from_zip(zipped("coxeter"))
        assert orient_faces(fs) is not None and flag_graph_bipartite(fs)

    def test_pinched_vertex(self):
        tet = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
        shifted = [tuple({0: 0, 1: 4, 2: 5, 3: 6}[v] for v in f) for f in tet]
        G = make_graph(7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                           (0, 4), (0, 5), (0, 6), (4, 5), (4, 6), (5, 6)])
        with pytest.raises(EmbeddingError):
            verify_polygonal_embedding(FaceSet.from_walks(G, tet + shifted))

    def test_non_edge_face(self):
        with pytest.raises(EmbeddingError):
            FaceSet.from_walks(graph("q3"), [(0, 1, 2, 3)])

    def test_edge_on_one_face_only(self):
        with pytest.raises(EmbeddingError):
            verify_polygonal_embedding(FaceSet.from_walks(complete_graph(4), HEMICUBE[:2]))


class TestFlags:
    def test_involutions(self):
        fs = surface("q3")
        r0, r1, r2 = flag_involutions(fs)
        assert len(flags(fs)) == 4 * 12
        for r in (r0, r1, r2):
            assert all(r[r[f]] == f and r[f] != f for f in r)
        # r0 r2 has order 2 on a polygonal map
        assert all(r0[r2[r0[r2[f]]]] == f for f in r0)


class TestKleinMap:
    def test_genus_three(self):
        rep = verify_polygonal_embedding(FaceSet.from_zip(zipped("coxeter")))
        assert (rep.vertices, rep.edges, rep.faces) == (56, 84, 24)
        assert rep.euler_characteristic == -4 and rep.genus == 3

    def test_petrie_walks(self):
        assert petrie_lengths(FaceSet.from_zip(zipped("coxeter"))) == [8] * 21

    def test_dual(self):
        fs = FaceSet.from_zip(zipped("coxeter"))
        D = dual_graph(fs)
        assert D.n == 24 and D.is_regular(7)
        tris = dual_triangles(fs)
        assert len(tris) == 56
        assert all(D.has_edge(a, b) and D.has_edge(b, c) and D.has_edge(a, c) for a, b, c in tris)

    def test_dual_needs_four_colours(self):
        D = dual_graph(FaceSet.from_zip(zipped("coxeter")))
        H = to_nx(D)
        # every neighbourhood is a 7-cycle, which alone needs three colours
        for v in H:
            link = H.subgraph(H[v])
            assert nx.is_isomorphic(link, nx.cycle_graph(7))
        col = find_coloring(D, 4)
        assert col is not None and all(col[u] != col[v] for u, v in D.edges())
        assert find_coloring(D, 3) is None

    def test_report(self):
        rep = klein_report(zipped("coxeter"))
        assert rep["automorphisms"] == 336 and rep["petrie_lengths"] == [8]
        assert rep["dual"]["regular_degree"] == 7
        assert rep["dual"]["embedding"]["genus"] == 3
        assert rep["dual"]["chromatic_number"] == 4

    def test_named_faces_give_proper_eight_colouring(self):
        names = fixture("coxeter").names
        Y = zipped("coxeter")
        face_names = [names[f.source] for f in Y.faces]
        rep = klein_report(Y, face_names)
        assert rep["dual"]["named_classes"] == 8 and rep["dual"]["named_coloring_proper"]
