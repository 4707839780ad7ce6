"""Planarity with a certificate that is checked independently.

The embedding or Kuratowski subgraph comes from networkx; acceptance rests on
our own checks: Euler's formula on the returned rotation system for planar
input, and homeomorphism to K5 or K3,3 for a non-planar one.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graph import Graph, complete_bipartite_graph, complete_graph, connected_components, make_graph
from .symmetry import are_isomorphic


class PlanarityError(RuntimeError):
    pass


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    faces: tuple[tuple[int, ...], ...] = ()
    kuratowski_edges: tuple[tuple[int, int], ...] = ()
    kuratowski_kind: str | None = None


def _to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def _faces(emb: nx.PlanarEmbedding) -> list[tuple[int, ...]]:
    seen = set()
    faces = []
    for u, v in emb.edges():
        if (u, v) in seen:
            continue
        face = emb.traverse_face(u, v, mark_half_edges=seen)
        faces.append(tuple(face))
    return faces


def _smooth(n: int, edges) -> tuple[int, list[tuple[int, int]]]:
    """Suppress degree-2 vertices; returns the branch graph on relabelled vertices."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    branch = sorted(v for v, nb in adj.items() if len(nb) != 2)
    if any(len(adj[v]) < 2 for v in branch):
        return -1, []
    index = {v: i for i, v in enumerate(branch)}
    out = []
    used = set()
    for b in branch:
        for nxt in adj[b]:
            if (b, nxt) in used:
                continue
            prev, cur = b, nxt
            used.add((b, nxt))
            while cur not in index:
                a, c = adj[cur]
                prev, cur = cur, (c if a == prev else a)
            used.add((cur, prev))
            out.append((index[b], index[cur]))
    return len(branch), out


def kuratowski_kind(n: int, edges) -> str | None:
    """'K5' or 'K3,3' when the edge set is a subdivision of one, else None."""
    m, branch_edges = _smooth(n, edges)
    if m not in (5, 6):
        return None
    keys = {tuple(sorted(e)) for e in branch_edges}
    if len(keys) != len(branch_edges) or any(a == b for a, b in keys):
        return None
    B = make_graph(m, sorted(keys))
    if m == 5 and are_isomorphic(B, complete_graph(5)):
        return "K5"
    if m == 6 and are_isomorphic(B, complete_bipartite_graph(3, 3)):
        return "K3,3"
    return None


def planarity(G: Graph) -> PlanarityResult:
    planar, cert = nx.check_planarity(_to_nx(G), counterexample=True)
    if planar:
        faces = tuple(_faces(cert))
        comps = len(connected_components(G))
        # Euler for a plane graph with c components: V - E + F = 1 + c
        if G.edge_count and G.n - G.edge_count + len(faces) != 1 + comps:
            raise PlanarityError("returned embedding does not satisfy Euler's formula")
        if G.n >= 3 and G.edge_count > 3 * G.n - 6:
            raise PlanarityError("planar verdict contradicts the 3n-6 edge bound")
        return PlanarityResult(True, faces=faces)
    edges = tuple(sorted(tuple(sorted(e)) for e in cert.edges()))
    if any(not G.has_edge(u, v) for u, v in edges):
        raise PlanarityError("obstruction uses edges outside the graph")
    kind = kuratowski_kind(G.n, edges)
    if kind is None:
        raise PlanarityError("obstruction is not a subdivision of K5 or K3,3")
    return PlanarityResult(False, kuratowski_edges=edges, kuratowski_kind=kind)


def is_planar(G: Graph) -> bool:
    return planarity(G).planar
