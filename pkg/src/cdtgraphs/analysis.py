"""Checks on the zipped graphs: triangle families and their configurations,
the line graphs of complete graphs, the Coxeter zip as a genus-3 map and
Fano-plane colourings of the Coxeter graph."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .configurations import (
    FANO_LINES,
    IncidenceConfiguration,
    find_duality,
    is_duality,
    menger_graph,
)
from .embedding import FaceSet, dual_graph, petrie_lengths, verify_polygonal_embedding
from .graph import (
    Graph,
    chromatic_number,
    cliques_of_size,
    find_coloring,
    complement,
    complete_graph,
    girth,
    induced_subgraph,
    is_connected,
    line_graph,
)
from .symmetry import are_isomorphic, automorphism_group, family_is_uh
from .zipper import MarkedGraph, ZipFace


class AnalysisError(ValueError):
    pass


@dataclass(frozen=True)
class CopyFamily:
    name: str
    members: tuple[tuple[int, ...], ...]
    template: Graph

    def __len__(self) -> int:
        return len(self.members)


def _edge_keys(G: Graph, member: Sequence[int]) -> list[tuple[int, int]]:
    return [(a, b) for a, b in itertools.combinations(sorted(member), 2) if G.has_edge(a, b)]


def component_view(Y: MarkedGraph, index: int) -> tuple[Graph, list[int]]:
    """Induced graph of one zipped component plus its vertex list (in Y numbering)."""
    comps = Y.components()
    if not 0 <= index < len(comps):
        raise AnalysisError(f"component {index} out of range")
    verts = comps[index]
    return induced_subgraph(Y.graph(), verts), verts


def _faces_in(Y: MarkedGraph, verts: Sequence[int]) -> list[ZipFace]:
    keep = set(verts)
    return [f for f in Y.faces if f.vertices[0] in keep]


def parallel_classes(members: Sequence[Sequence[int]], size: int = 3) -> list[list[int]] | None:
    """Split the members into groups of ``size`` pairwise vertex-disjoint
    members; returns member indices per group, or None."""
    sets = [set(m) for m in members]
    groups = [g for g in itertools.combinations(range(len(sets)), size)
              if all(not (sets[a] & sets[b]) for a, b in itertools.combinations(g, 2))]
    target = set(range(len(sets)))

    def cover(left: set[int], chosen: list[tuple[int, ...]]):
        if not left:
            return chosen
        first = min(left)
        for g in groups:
            if first in g and set(g) <= left:
                got = cover(left - set(g), chosen + [g])
                if got is not None:
                    return got
        return None

    found = cover(target, [])
    return None if found is None else [list(g) for g in found]


@dataclass
class PappusTriangles:
    H0: CopyFamily
    H1: CopyFamily
    H2: CopyFamily
    common_labels: bool
    parallel: dict[str, list[list[int]] | None]
    edge_cover: dict[str, bool]


def classify_pappus_triangles(Y: MarkedGraph, index: int = 0) -> PappusTriangles:
    """Split the triangles of one component into the two classes of zipped
    faces (two-coloured by edge sharing) and the remaining triangles."""
    H, verts = component_view(Y, index)
    local = {v: i for i, v in enumerate(verts)}
    faces = _faces_in(Y, verts)
    if any(len(f.vertices) != 3 for f in faces):
        raise AnalysisError("zipped faces are not triangles")
    by_edge: dict[int, list[int]] = {}
    for fi, f in enumerate(faces):
        for e in f.edges:
            by_edge.setdefault(e, []).append(fi)
    side = [-1] * len(faces)
    for s in range(len(faces)):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for e in faces[x].edges:
                for y in by_edge[e]:
                    if y == x:
                        continue
                    if side[y] < 0:
                        side[y] = 1 - side[x]
                        stack.append(y)
                    elif side[y] == side[x]:
                        raise AnalysisError("zipped triangles do not split into two classes")
    tri = lambda f: tuple(sorted(local[v] for v in f.vertices))
    h1 = sorted(tri(f) for f, s in zip(faces, side) if s == 0)
    h2 = sorted(tri(f) for f, s in zip(faces, side) if s == 1)
    zipped = set(h1) | set(h2)
    h0 = [t for t in cliques_of_size(H, 3) if t not in zipped]
    if (len(h0), len(h1), len(h2)) != (9, 9, 9):
        raise AnalysisError(f"triangle counts {(len(h0), len(h1), len(h2))}, expected (9, 9, 9)")

    label = {}
    for e in Y.edges:
        if e.u in local and e.v in local:
            a, b = local[e.u], local[e.v]
            label[(min(a, b), max(a, b))] = e.label
    common = all(len({label[k] for k in _edge_keys(H, t)}) == 1 for t in h0)

    K3 = complete_graph(3)
    fams = {name: CopyFamily(name, tuple(m), K3) for name, m in (("H0", h0), ("H1", h1), ("H2", h2))}
    edges = set(H.edges())
    cover = {}
    for name, fam in fams.items():
        used = [k for m in fam.members for k in _edge_keys(H, m)]
        cover[name] = len(used) == len(set(used)) and set(used) == edges
    return PappusTriangles(
        fams["H0"], fams["H1"], fams["H2"], common,
        {name: parallel_classes(f.members) for name, f in fams.items()},
        cover,
    )


def configuration_from_family(H: Graph, fam: CopyFamily) -> IncidenceConfiguration:
    points = tuple(H.label(v) for v in range(H.n))
    return IncidenceConfiguration(points, tuple(tuple(sorted(m)) for m in fam.members),
                                  tuple(f"{fam.name}[{i}]" for i in range(len(fam))))


@dataclass
class ConfigurationReport:
    points: int
    lines: int
    is_n3: bool
    self_dual: bool
    duality_verified: bool
    menger_isomorphic: bool

    @property
    def passed(self) -> bool:
        return self.is_n3 and self.self_dual and self.duality_verified and self.menger_isomorphic

    def as_dict(self) -> dict:
        return {**self.__dict__, "passed": self.passed}


def check_configuration(H: Graph, fam: CopyFamily) -> ConfigurationReport:
    cfg = configuration_from_family(H, fam)
    duality = find_duality(cfg)
    ok = duality is not None and is_duality(cfg, *duality)
    return ConfigurationReport(
        len(cfg.points), len(cfg.lines), cfg.is_n3(), duality is not None, ok,
        are_isomorphic(menger_graph(cfg), H.simple()) is not None,
    )


# -- K2-fastened families ----------------------------------------------------


@dataclass
class FamilyCheck:
    name: str
    copies: int
    per_vertex: int | None
    uh: bool
    edge_disjoint_cover: bool
    constant_incidence: bool
    census: bool
    each_edge_once: bool

    @property
    def passed(self) -> bool:
        return self.uh and self.edge_disjoint_cover and self.constant_incidence and self.census and self.each_edge_once

    def as_dict(self) -> dict:
        return {**self.__dict__, "passed": self.passed}


@dataclass
class FastenedFamiliesReport:
    families: list[FamilyCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.families) and all(f.passed for f in self.families)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(f.copies for f in self.families)

    @property
    def per_vertex(self) -> tuple[int | None, ...]:
        return tuple(f.per_vertex for f in self.families)

    def as_dict(self) -> dict:
        return {"families": [f.as_dict() for f in self.families], "passed": self.passed}


def _is_complete(T: Graph) -> bool:
    return T.edge_count == T.n * (T.n - 1) // 2


def check_k2_fastened(G: Graph, families: Sequence[CopyFamily], aut=None) -> FastenedFamiliesReport:
    """Conditions on a list of copy families of complete templates.

    The census counts induced copies of each template that do not sit inside
    a copy of a larger template from another family; it must equal the total
    size of the families sharing that template.
    """
    if not families:
        raise AnalysisError("at least one family is required")
    if any(not _is_complete(f.template) for f in families):
        raise AnalysisError("only complete templates are supported")
    if aut is None:
        aut = automorphism_group(G)
    edges = set(G.edges())
    report = FastenedFamiliesReport()
    for fam in families:
        s = fam.template.n
        members = [tuple(sorted(m)) for m in fam.members]
        induced_ok = all(are_isomorphic(induced_subgraph(G, m), fam.template) is not None for m in members)
        used = [k for m in members for k in _edge_keys(G, m)]
        cover = induced_ok and len(used) == len(set(used)) and set(used) == edges
        counts = [0] * G.n
        for m in members:
            for v in m:
                counts[v] += 1
        overlap_ok = all(len(set(a) & set(b)) <= 1 for a, b in itertools.combinations(members, 2))
        constant = len(set(counts)) == 1 and overlap_ok
        larger = [m for f in families if f.template.n > s for m in f.members]
        census_count = sum(
            1 for c in cliques_of_size(G, s) if not any(set(c) <= set(m) for m in larger)
        )
        expected = sum(len(f) for f in families if f.template.n == s)
        per_edge: dict[tuple[int, int], int] = {}
        for k in used:
            per_edge[k] = per_edge.get(k, 0) + 1
        once = set(per_edge) == edges and set(per_edge.values()) == {1}
        report.families.append(FamilyCheck(
            fam.name, len(members), counts[0] if constant else None,
            family_is_uh(G, aut, members), cover, constant, census_count == expected, once,
        ))
    return report


# -- line graphs of complete graphs ------------------------------------------


def lkn_families(n: int) -> tuple[Graph, CopyFamily, CopyFamily]:
    """L(K_n) with its vertex stars (copies of K_{n-1}) and colour triangles.

    Vertex ``ab`` of L(K_n) is the edge ``ab`` of K_n; the edges of L(K_n)
    through a common endpoint ``v`` get colour ``v``, and three colours
    ``a, b, c`` single out the triangle ``ab, bc, ca``.
    """
    if not 4 <= n <= 8:
        raise AnalysisError("n must lie between 4 and 8")
    L = line_graph(complete_graph(n))
    idx = {tuple(map(int, L.label(v).split("-"))): v for v in range(L.n)}
    e = lambda a, b: idx[(min(a, b), max(a, b))]
    stars = [tuple(sorted(e(v, w) for w in range(n) if w != v)) for v in range(n)]
    triangles = [tuple(sorted((e(a, b), e(b, c), e(a, c)))) for a, b, c in itertools.combinations(range(n), 3)]
    return (
        L,
        CopyFamily(f"K{n - 1}", tuple(stars), complete_graph(n - 1)),
        CopyFamily("K3", tuple(triangles), complete_graph(3)),
    )


def check_lkn_fastened(n: int) -> dict:
    L, stars, tris = lkn_families(n)
    rep = check_k2_fastened(L, [stars, tris])
    return {
        "n": n,
        "vertices": L.n,
        "copies": list(rep.counts),
        "expected_copies": [n, comb(n, 3)],
        "per_vertex": list(rep.per_vertex),
        "expected_per_vertex": [2, n - 2],
        "conditions": rep.as_dict(),
        "passed": rep.passed and list(rep.counts) == [n, comb(n, 3)] and list(rep.per_vertex) == [2, n - 2],
    }


# -- Desargues ---------------------------------------------------------------


def desargues_report(Y: MarkedGraph) -> dict:
    from .catalog import build

    comps = Y.components()
    lk5 = line_graph(complete_graph(5))
    pet = build("petersen")
    out: dict = {"components": len(comps), "parts": []}
    for i in range(len(comps)):
        H, verts = component_view(Y, i)
        Hs = H.simple()
        k4 = cliques_of_size(Hs, 4)
        tris = [t for t in cliques_of_size(Hs, 3) if not any(set(t) <= set(q) for q in k4)]
        local = {v: j for j, v in enumerate(verts)}
        labels = {}
        for e in Y.edges:
            if e.u in local:
                a, b = local[e.u], local[e.v]
                labels[(min(a, b), max(a, b))] = e.label
        constant = all(len({labels[k] for k in _edge_keys(Hs, t)}) == 1 for t in tris)
        k4_fam = CopyFamily("K4", tuple(k4), complete_graph(4))
        k3_fam = CopyFamily("K3", tuple(tris), complete_graph(3))
        fast = check_k2_fastened(Hs, [k4_fam, k3_fam])
        cfg = check_configuration(Hs, k3_fam)
        out["parts"].append({
            "vertices": H.n,
            "edges": H.edge_count,
            "simple": H.is_simple,
            "isomorphic_to_line_graph_of_K5": are_isomorphic(Hs, lk5) is not None,
            "complement_is_petersen": are_isomorphic(complement(Hs), pet) is not None,
            "k4_copies": len(k4),
            "k3_copies_outside_k4": len(tris),
            "k3_edges_share_label": constant,
            "fastened": fast.as_dict(),
            "per_vertex": list(fast.per_vertex),
            "configuration": cfg.as_dict(),
        })
    if len(comps) == 2:
        a, _ = component_view(Y, 0)
        b, _ = component_view(Y, 1)
        out["components_isomorphic"] = are_isomorphic(a.simple(), b.simple()) is not None
    return out


# -- Pappus ------------------------------------------------------------------


def pappus_report(Y: MarkedGraph) -> dict:
    comps = Y.components()
    out: dict = {"components": len(comps), "co_oriented_pairs": Y.co_oriented, "parts": []}
    for i in range(len(comps)):
        H, verts = component_view(Y, i)
        Hs = H.simple()
        tri = classify_pappus_triangles(Y, i)
        fams = [tri.H0, tri.H1, tri.H2]
        fs = FaceSet.from_walks(Hs, list(tri.H0.members) + list(tri.H1.members))
        emb = verify_polygonal_embedding(fs)
        out["parts"].append({
            "vertices": H.n,
            "edges": H.edge_count,
            "family_sizes": [len(f) for f in fams],
            "h0_edges_share_label": tri.common_labels,
            "parallel_classes": {k: v is not None and len(v) == 3 for k, v in tri.parallel.items()},
            "edge_cover": tri.edge_cover,
            "fastened": check_k2_fastened(Hs, fams).as_dict(),
            "configurations": {f.name: check_configuration(Hs, f).as_dict() for f in fams},
            "embedding_h0_h1": emb.as_dict(),
        })
    if len(comps) == 2:
        a, _ = component_view(Y, 0)
        b, _ = component_view(Y, 1)
        out["components_isomorphic"] = are_isomorphic(a.simple(), b.simple()) is not None
    return out


# -- Coxeter: the genus-3 map and its dual ----------------------------------


def dual_cycle_graph(Y: MarkedGraph, faces: FaceSet | None = None) -> Graph:
    """One vertex per face; two faces adjacent when they share an edge."""
    return dual_graph(faces if faces is not None else FaceSet.from_zip(Y))


def dual_triangles(fs: FaceSet) -> list[tuple[int, int, int]]:
    """Faces around each degree-3 vertex, as triples of face indices."""
    around: dict[int, set[int]] = {}
    for j, w in enumerate(fs.walks):
        for v in w:
            around.setdefault(v, set()).add(j)
    if any(len(s) != 3 for s in around.values()):
        raise AnalysisError("dual triangles need every vertex on exactly three faces")
    return [tuple(sorted(around[v])) for v in sorted(around)]


def klein_report(Y: MarkedGraph, face_names: Sequence[str] | None = None) -> dict:
    """Counts, surface, symmetry and Petrie walks of the zipped Coxeter map,
    plus its dual. ``face_names`` like ``"3^2"`` colour each dual vertex by
    the part before ``^``; the report says whether that colouring is proper."""
    H = Y.graph()
    fs = FaceSet.from_zip(Y)
    emb = verify_polygonal_embedding(fs)
    aut = automorphism_group(H.simple())
    petrie = sorted(set(petrie_lengths(fs)))
    D = dual_cycle_graph(Y, fs)
    tris = dual_triangles(fs)
    dual_fs = FaceSet.from_walks(D, tris)
    dual_emb = verify_polygonal_embedding(dual_fs)
    report = {
        "vertices": H.n,
        "edges": H.edge_count,
        "faces": len(fs),
        "simple": H.is_simple,
        "cubic": H.is_regular(3),
        "connected": is_connected(H),
        "girth": girth(H.simple()),
        "embedding": emb.as_dict(),
        "automorphisms": aut.order,
        "petrie_lengths": petrie,
        "dual": {
            "vertices": D.n,
            "regular_degree": D.degrees()[0] if D.is_regular() else None,
            "triangles": len(tris),
            "embedding": dual_emb.as_dict(),
        },
    }
    colouring = find_coloring(D, chromatic_number(D))
    report["dual"]["chromatic_number"] = max(colouring) + 1
    report["dual"]["minimum_coloring"] = colouring
    if face_names is not None:
        classes = [name.split("^")[0] for name in face_names]
        report["dual"]["named_classes"] = len(set(classes))
        report["dual"]["named_coloring_proper"] = all(classes[u] != classes[v] for u, v in D.edges())
    return report


# -- Fano colourings of the Coxeter graph ------------------------------------


FANO = tuple(frozenset(int(c) for c in line) for line in FANO_LINES)
_THIRD = {}
for _line in FANO:
    for _a, _b in itertools.permutations(_line, 2):
        (_THIRD[(_a, _b)],) = _line - {_a, _b}


def fano_third(a: int, b: int) -> int:
    """Third point on the line through two distinct points."""
    return _THIRD[(a, b)]


def check_fano_coloring(G: Graph, vertex_colors: Sequence[int], edge_colors: dict) -> bool:
    """Edge colours at every vertex form a line, each edge colour completes
    the line through its end colours, and each vertex colour with its edge
    colours leaves a triangle of the plane."""
    def ec(u, v):
        return edge_colors.get((u, v), edge_colors.get((v, u)))

    if any(c not in range(1, 8) for c in vertex_colors):
        return False
    for u, v in G.edges():
        c = ec(u, v)
        if c is None or frozenset((vertex_colors[u], vertex_colors[v], c)) not in FANO:
            return False
    for v in range(G.n):
        around = frozenset(ec(v, w) for w in G.adjacency[v])
        if around not in FANO:
            return False
        rest = frozenset(range(1, 8)) - around - {vertex_colors[v]}
        if len(rest) != 3 or rest in FANO:
            return False
    return True


def edge_colors_from_vertices(G: Graph, vertex_colors: Sequence[int]) -> dict:
    return {(u, v): fano_third(vertex_colors[u], vertex_colors[v]) for u, v in G.edges()}


def find_fano_coloring(G: Graph) -> tuple[list[int], dict] | None:
    """Backtracking over vertex colours; edge colours are then forced."""
    order: list[int] = []
    seen = set()
    for s in range(G.n):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in G.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    col = [0] * G.n

    def vertex_ok(v: int) -> bool:
        # at a fully coloured neighbourhood the three edge colours must be a line missing col[v]
        nbrs = G.adjacency[v]
        if any(col[w] == 0 for w in nbrs):
            return True
        around = frozenset(fano_third(col[v], col[w]) for w in nbrs)
        return around in FANO and col[v] not in around

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in range(1, 8):
            if any(col[w] == c for w in G.adjacency[v]):
                continue
            col[v] = c
            ok = vertex_ok(v) and all(vertex_ok(w) for w in G.adjacency[v] if col[w])
            # edge colours at v must stay distinct as they are assigned
            if ok:
                seen_e = [fano_third(c, col[w]) for w in G.adjacency[v] if col[w]]
                ok = len(seen_e) == len(set(seen_e))
            if ok and place(i + 1):
                return True
            col[v] = 0
        return False

    if not place(0):
        return None
    return list(col), edge_colors_from_vertices(G, col)


def fano_collineations() -> list[tuple[int, ...]]:
    """All 168 permutations of the points 1..7 mapping lines to lines.

    Returned as tuples ``p`` with ``p[i]`` the image of point ``i`` (index 0 unused).
    """
    out = []
    for perm in itertools.permutations(range(1, 8)):
        p = (0,) + perm
        if all(frozenset(p[x] for x in line) in FANO for line in FANO):
            out.append(p)
    return out


def apply_collineation(p: Sequence[int], vertex_colors: Sequence[int], edge_colors: dict):
    return [p[c] for c in vertex_colors], {k: p[c] for k, c in edge_colors.items()}


__all__ = [
    "AnalysisError", "CopyFamily", "classify_pappus_triangles", "configuration_from_family",
    "check_configuration", "check_k2_fastened", "lkn_families", "check_lkn_fastened",
    "desargues_report", "pappus_report", "dual_cycle_graph", "klein_report",
    "check_fano_coloring", "find_fano_coloring", "fano_collineations", "apply_collineation",
    "edge_colors_from_vertices", "fano_third", "parallel_classes",
]
