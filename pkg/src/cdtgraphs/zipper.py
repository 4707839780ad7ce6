"""Cycle powers of oriented girth cycles and the zipped quotient graph.

Every position ``p`` of an oriented g-cycle ``c`` is an occurrence. The
(k-1)-th power of ``c`` has one arc per position, from ``p`` to
``p + k - 1``, standing for the directed path ``c[p..p+k-1]``; for k = 3 the
arc is labelled by its middle vertex ``c[p+1]``. Each k-vertex path of the
host lies on two girth cycles and so is represented by two arcs. Zipping
glues each such pair into a single undirected edge and identifies the
endpoint occurrences carrying the same host vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .cycles import Cycle, canonical_path
from .graph import Graph, connected_components, induced_subgraph, make_graph, power

SUPPORTED_K = (2, 3)


class ZipError(ValueError):
    pass


class UnsupportedPower(ZipError):
    """Zipping beyond paths on three vertices is not constructed here."""


@dataclass(frozen=True)
class MarkedCyclePower:
    source: int
    cycles: tuple[tuple[int, ...], ...]  # positions in the source cycle
    labels: tuple[tuple[int | None, ...], ...]  # label of the arc leaving each position


def cycle_power(oc: Sequence[int], k: int, source: int = 0) -> MarkedCyclePower:
    """Split the step-(k-1) arcs of an oriented cycle into directed cycles.

    >>> cycle_power((1, 2, 3, 4, 5, 6), 3).labels
    ((2, 4, 6), (3, 5, 1))
    """
    if k not in SUPPORTED_K:
        raise UnsupportedPower(f"cycle powers for k={k} are not supported (k must be 2 or 3)")
    g = len(oc)
    step = k - 1
    cycles, labels = [], []
    for start in range(gcd(g, step)):
        seq, p = [], start
        while True:
            seq.append(p)
            p = (p + step) % g
            if p == start:
                break
        cycles.append(tuple(seq))
        labels.append(tuple(oc[(q + 1) % g] if k == 3 else None for q in seq))
    return MarkedCyclePower(source, tuple(cycles), tuple(labels))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller root wins so class representatives are stable
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass(frozen=True)
class ZipEdge:
    u: int
    v: int
    label: int | None
    path: tuple[int, ...]
    arcs: tuple[tuple[int, int], tuple[int, int]]  # (cycle, position) of both arcs
    opposite: bool


@dataclass(frozen=True)
class ZipFace:
    source: int
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class MarkedGraph:
    """Quotient of the cycle powers: vertices are occurrence classes."""

    host_names: tuple[str, ...]
    vertex_host: tuple[int, ...]
    occurrences: tuple[tuple[tuple[int, int], ...], ...]
    edges: tuple[ZipEdge, ...]
    faces: tuple[ZipFace, ...]
    k: int
    co_oriented: int = 0

    @property
    def n(self) -> int:
        return len(self.vertex_host)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertex_name(self, v: int) -> str:
        host = self.vertex_host[v]
        same = [w for w in range(self.n) if self.vertex_host[w] == host]
        return self.host_names[host] if len(same) == 1 else f"{self.host_names[host]}#{same.index(v)}"

    def graph(self) -> Graph:
        """Underlying multigraph; parallel edges keep their labels."""
        pairs = [(e.u, e.v) for e in self.edges]
        labels = [self.vertex_name(v) for v in range(self.n)]
        edge_labels = [None if e.label is None else self.host_names[e.label] for e in self.edges]
        return make_graph(self.n, pairs, labels=labels, multigraph=True, edge_labels=edge_labels)

    def components(self) -> list[list[int]]:
        return connected_components(self.graph())

    def component(self, index: int) -> Graph:
        comps = self.components()
        return induced_subgraph(self.graph(), comps[index])

    def face_walks(self, vertices: Sequence[int] | None = None) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        keep = None if vertices is None else set(vertices)
        return [(f.vertices, f.edges) for f in self.faces if keep is None or f.vertices[0] in keep]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "vertices": [
                {"name": self.vertex_name(v), "host": self.host_names[self.vertex_host[v]],
                 "occurrences": [list(o) for o in self.occurrences[v]]}
                for v in range(self.n)
            ],
            "edges": [
                {"ends": [e.u, e.v],
                 "label": None if e.label is None else self.host_names[e.label],
                 "path": [self.host_names[x] for x in e.path],
                 "arcs": [list(a) for a in e.arcs],
                 "opposite": e.opposite}
                for e in self.edges
            ],
            "faces": [{"source": f.source, "vertices": list(f.vertices), "edges": list(f.edges)}
                      for f in self.faces],
            "components": len(self.components()),
            "co_oriented_pairs": self.co_oriented,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_dot(self) -> str:
        lines = ["graph Y {"]
        for v in range(self.n):
            lines.append(f'  {v} [label="{self.vertex_name(v)}"];')
        for e in self.edges:
            lab = "" if e.label is None else f' [label="{self.host_names[e.label]}"]'
            lines.append(f"  {e.u} -- {e.v}{lab};")
        lines.append("}")
        return "\n".join(lines) + "\n"


IDENTIFY_MODES = ("auto", "closure", "host")


def resolve_identify(identify: str, g: int, k: int) -> str:
    """``auto`` keeps the glue closure while each power is a single cycle and
    identifies by host vertex once the powers split into several cycles."""
    if identify not in IDENTIFY_MODES:
        raise ZipError(f"identify must be one of {IDENTIFY_MODES}")
    if identify == "auto":
        return "closure" if gcd(g, k - 1) == 1 else "host"
    return identify


def zip_cycles(
    G: Graph, oriented: Sequence[Cycle], k: int, strict: bool = True, identify: str = "auto"
) -> MarkedGraph:
    """Zip the (k-1)-powers of ``oriented`` along arcs representing the same path.

    Occurrences are identified either by the closure of the gluing alone
    (``closure``) or whenever they carry the same host vertex (``host``).
    With ``strict`` every pair must be oppositely oriented; otherwise
    co-oriented pairs are glued end to end as well and counted.
    """
    if k not in SUPPORTED_K:
        raise UnsupportedPower(f"zipping for k={k} is not supported (k must be 2 or 3)")
    oriented = [tuple(c) for c in oriented]
    if not oriented:
        raise ZipError("nothing to zip")
    g = len(oriented[0])
    if any(len(c) != g for c in oriented):
        raise ZipError("all cycles must have the same length")
    occ = lambda i, p: i * g + p
    uf = _UnionFind(len(oriented) * g)

    arcs_by_path: dict[tuple[int, ...], list[tuple[int, int, int]]] = {}
    for i, c in enumerate(oriented):
        for p in range(g):
            path = tuple(c[(p + j) % g] for j in range(k))
            key = canonical_path(path)
            arcs_by_path.setdefault(key, []).append((i, p, 1 if key == path else -1))

    pairs = []
    co = 0
    for key in sorted(arcs_by_path):
        arcs = arcs_by_path[key]
        if len(arcs) != 2:
            raise ZipError(f"path {key} is carried by {len(arcs)} arcs, expected 2")
        (i, p, di), (j, q, dj) = arcs
        ci, cj = oriented[i], oriented[j]
        if k == 3 and ci[(p + 1) % g] != cj[(q + 1) % g]:
            raise ZipError(f"arcs over {key} carry different labels")
        opposite = di != dj
        if not opposite:
            if strict:
                raise ZipError(f"arcs over {key} are not oppositely oriented; the orientation is invalid")
            co += 1
        tail_i, head_i = occ(i, p), occ(i, (p + k - 1) % g)
        tail_j, head_j = occ(j, q), occ(j, (q + k - 1) % g)
        if opposite:
            uf.union(tail_i, head_j)
            uf.union(head_i, tail_j)
        else:
            uf.union(tail_i, tail_j)
            uf.union(head_i, head_j)
        pairs.append((key, (i, p), (j, q), opposite))

    if resolve_identify(identify, g, k) == "host":
        first: dict[int, int] = {}
        for o in range(len(oriented) * g):
            h = oriented[o // g][o % g]
            if h in first:
                uf.union(first[h], o)
            else:
                first[h] = o

    host_of = lambda o: oriented[o // g][o % g]
    roots = sorted({uf.find(o) for o in range(len(oriented) * g)})
    index = {r: n for n, r in enumerate(roots)}
    members: list[list[tuple[int, int]]] = [[] for _ in roots]
    for o in range(len(oriented) * g):
        members[index[uf.find(o)]].append((o // g, o % g))
    vertex_host = []
    for cls in members:
        hosts = {oriented[i][p] for i, p in cls}
        if len(hosts) != 1:
            raise ZipError("an occurrence class mixes different host vertices")
        vertex_host.append(hosts.pop())
    cls_of = lambda i, p: index[uf.find(occ(i, p))]

    edges = []
    edge_of_arc: dict[tuple[int, int], int] = {}
    for key, (i, p), (j, q), opposite in pairs:
        u, v = cls_of(i, p), cls_of(i, (p + k - 1) % g)
        if u == v:
            raise ZipError(f"zipping {key} collapses an edge to a loop")
        label = key[1] if k == 3 else None
        edge_of_arc[(i, p)] = edge_of_arc[(j, q)] = len(edges)
        edges.append(ZipEdge(u, v, label, key, ((i, p), (j, q)), opposite))

    faces = []
    for i, c in enumerate(oriented):
        for seq in cycle_power(c, k, i).cycles:
            faces.append(ZipFace(i, tuple(cls_of(i, p) for p in seq), tuple(edge_of_arc[(i, p)] for p in seq)))

    return MarkedGraph(
        tuple(G.labels) if G.labels else tuple(str(v) for v in range(G.n)),
        tuple(vertex_host),
        tuple(tuple(m) for m in members),
        tuple(edges),
        tuple(faces),
        k,
        co,
    )


def zip_oac(G: Graph, oac, k: int, strict: bool = True, identify: str = "auto") -> MarkedGraph:
    return zip_cycles(G, oac.cycles, k, strict, identify)


def kappa2_reference(G: Graph, k: int, g: int, kappa: int | None = None) -> Graph:
    """The (k-1)-th power of G with every edge repeated g-1 times."""
    if kappa is None:
        from .oac import classify_kappa

        kappa = classify_kappa(G, g, k)
    if kappa != 2:
        raise ZipError(f"the multiplicity reference only applies when kappa = 2 (got {kappa})")
    P = power(G, k - 1)
    edges = [e for e in P.edges() for _ in range(g - 1)]
    return make_graph(G.n, edges, labels=G.labels, multigraph=True)


def same_underlying_multigraph(Y: MarkedGraph, ref: Graph) -> bool:
    """Equality after naming each zipped vertex by its host vertex.

    Requires the host-vertex map to be a bijection onto ``ref``'s vertices.
    """
    if sorted(Y.vertex_host) != list(range(ref.n)):
        return False
    mine: dict[tuple[int, int], int] = {}
    for e in Y.edges:
        a, b = Y.vertex_host[e.u], Y.vertex_host[e.v]
        key = (min(a, b), max(a, b))
        mine[key] = mine.get(key, 0) + 1
    theirs = {e: ref.mult(*e) for e in ref.edges()}
    return mine == theirs


def reconstructs_host(G: Graph, Y: MarkedGraph) -> bool:
    """For k = 2 zips: the host-vertex map is an isomorphism onto G."""
    if sorted(Y.vertex_host) != list(range(G.n)) or Y.edge_count != G.edge_count:
        return False
    keys = {(min(Y.vertex_host[e.u], Y.vertex_host[e.v]), max(Y.vertex_host[e.u], Y.vertex_host[e.v])) for e in Y.edges}
    return len(keys) == Y.edge_count and all(G.has_edge(a, b) for a, b in keys)


def check_label_fibration(Y: MarkedGraph) -> bool:
    """No edge labelled by a host vertex touches a vertex over that same host."""
    return all(e.label is None or e.label not in (Y.vertex_host[e.u], Y.vertex_host[e.v]) for e in Y.edges)


__all__ = [
    "MarkedCyclePower", "MarkedGraph", "ZipEdge", "ZipFace", "ZipError", "UnsupportedPower",
    "cycle_power", "zip_cycles", "zip_oac", "kappa2_reference", "same_underlying_multigraph",
    "reconstructs_host", "check_label_fibration"
]
