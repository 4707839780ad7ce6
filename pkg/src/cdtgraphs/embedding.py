"""Closed surfaces assembled from a list of polygonal faces.

A face is a closed walk given by its vertex sequence and, for multigraphs,
the ids of the edges it crosses. Gluing the faces along shared edges gives a
closed surface when every edge is crossed exactly twice and the faces around
each vertex close up into a single disc.

Flags are triples ``(face, position, end)``: the edge crossed at
``position`` of ``face`` together with one of its two ends (0 = the vertex at
``position``, 1 = the next one).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class FaceSet:
    walks: tuple[tuple[int, ...], ...]
    edge_ids: tuple[tuple[int, ...], ...]
    edge_ends: tuple[tuple[int, int], ...]
    vertex_count: int

    @classmethod
    def from_walks(cls, G: Graph, walks: Sequence[Sequence[int]]) -> FaceSet:
        """Faces of a simple graph, edges identified by their end vertices."""
        index = {e: i for i, e in enumerate(G.edges())}
        ids = []
        for w in walks:
            row = []
            for i in range(len(w)):
                a, b = w[i], w[(i + 1) % len(w)]
                key = (min(a, b), max(a, b))
                if key not in index:
                    raise EmbeddingError(f"face {tuple(w)} uses a non-edge {key}")
                row.append(index[key])
            ids.append(tuple(row))
        return cls(tuple(tuple(w) for w in walks), tuple(ids), tuple(G.edges()), G.n)

    @classmethod
    def from_zip(cls, Y, faces=None) -> FaceSet:
        """Faces of a zipped graph (defaults to all cycle-power faces)."""
        faces = Y.faces if faces is None else faces
        ends = tuple((e.u, e.v) for e in Y.edges)
        return cls(tuple(f.vertices for f in faces), tuple(f.edges for f in faces), ends, Y.n)

    def __len__(self) -> int:
        return len(self.walks)

    def used_vertices(self) -> set[int]:
        return {v for w in self.walks for v in w}

    def used_edges(self) -> set[int]:
        return {e for row in self.edge_ids for e in row}


@dataclass(frozen=True)
class EmbeddingReport:
    vertices: int
    edges: int
    faces: int
    euler_characteristic: int
    orientable: bool
    genus: int | None  # orientable genus; None when non-orientable
    face_orientation: tuple[int, ...] | None = None

    def as_dict(self) -> dict:
        return {
            "vertices": self.vertices,
            "edges": self.edges,
            "faces": self.faces,
            "euler_characteristic": self.euler_characteristic,
            "orientable": self.orientable,
            "genus": self.genus,
        }


def _occurrences(fs: FaceSet) -> dict[int, list[tuple[int, int]]]:
    occ: dict[int, list[tuple[int, int]]] = {}
    for j, row in enumerate(fs.edge_ids):
        for i, e in enumerate(row):
            occ.setdefault(e, []).append((j, i))
    for e, where in occ.items():
        if len(where) != 2:
            raise EmbeddingError(f"edge {e} is covered {len(where)} times, expected 2")
    return occ


def _direction(fs: FaceSet, j: int, i: int) -> int:
    """+1 if face j crosses its i-th edge from the edge's first end to its second."""
    w = fs.walks[j]
    a, b = w[i], w[(i + 1) % len(w)]
    u, v = fs.edge_ends[fs.edge_ids[j][i]]
    if (a, b) == (u, v):
        return 1
    if (a, b) == (v, u):
        return -1
    raise EmbeddingError(f"face {j} position {i} does not run along edge {fs.edge_ids[j][i]}")


def orient_faces(fs: FaceSet) -> tuple[int, ...] | None:
    """Signs making every edge's two crossings opposite, or None if impossible."""
    occ = _occurrences(fs)
    adj: list[list[tuple[int, int]]] = [[] for _ in fs.walks]
    for e in sorted(occ):
        (j1, i1), (j2, i2) = occ[e]
        # need s1*d1 != s2*d2, i.e. s1*s2 == -d1*d2
        rel = -_direction(fs, j1, i1) * _direction(fs, j2, i2)
        if j1 == j2:
            if rel != 1:
                return None
            continue
        adj[j1].append((j2, rel))
        adj[j2].append((j1, rel))
    sign = [0] * len(fs.walks)
    for root in range(len(fs.walks)):
        if sign[root]:
            continue
        sign[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, rel in adj[x]:
                want = sign[x] * rel
                if not sign[y]:
                    sign[y] = want
                    queue.append(y)
                elif sign[y] != want:
                    return None
    return tuple(sign)


def check_vertex_links(fs: FaceSet) -> None:
    """Raise unless the face corners around every vertex form one cycle."""
    _occurrences(fs)
    link: dict[int, dict[int, list[int]]] = {}
    for j, w in enumerate(fs.walks):
        row = fs.edge_ids[j]
        for i in range(len(w)):
            v = w[i]
            a, b = row[i - 1], row[i]
            nb = link.setdefault(v, {})
            nb.setdefault(a, []).append(b)
            nb.setdefault(b, []).append(a)
    for v, nb in link.items():
        if any(len(x) != 2 for x in nb.values()):
            raise EmbeddingError(f"the corners at vertex {v} do not pair up")
        start = next(iter(nb))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nb[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(nb):
            raise EmbeddingError(f"vertex {v} is pinched: its faces form more than one disc")


def verify_polygonal_embedding(fs: FaceSet) -> EmbeddingReport:
    check_vertex_links(fs)
    V = len(fs.used_vertices())
    E = len(fs.used_edges())
    F = len(fs.walks)
    chi = V - E + F
    signs = orient_faces(fs)
    if signs is not None:
        if chi % 2:
            raise EmbeddingError("odd Euler characteristic on an orientable surface")
        genus = (2 - chi) // 2
    else:
        genus = None
    return EmbeddingReport(V, E, F, chi, signs is not None, genus, signs)


# -- flags -----------------------------------------------------------------


Flag = tuple[int, int, int]


def flags(fs: FaceSet) -> list[Flag]:
    return [(j, i, end) for j, w in enumerate(fs.walks) for i in range(len(w)) for end in (0, 1)]


def _flag_vertex(fs: FaceSet, f: Flag) -> int:
    j, i, end = f
    w = fs.walks[j]
    return w[(i + end) % len(w)]


def flag_involutions(fs: FaceSet):
    """The three involutions r0 (other end), r1 (other edge at the corner)
    and r2 (other face across the edge) as dicts on flags."""
    occ = _occurrences(fs)
    r0, r1, r2 = {}, {}, {}
    for f in flags(fs):
        j, i, end = f
        g = len(fs.walks[j])
        r0[f] = (j, i, 1 - end)
        r1[f] = (j, (i - 1) % g, 1) if end == 0 else (j, (i + 1) % g, 0)
        e = fs.edge_ids[j][i]
        (ja, ia), (jb, ib) = occ[e]
        other = (jb, ib) if (ja, ia) == (j, i) else (ja, ia)
        v = _flag_vertex(fs, f)
        for oe in (0, 1):
            cand = (other[0], other[1], oe)
            if _flag_vertex(fs, cand) == v:
                r2[f] = cand
                break
        else:
            raise EmbeddingError(f"edge {e} does not match up across its two faces")
    return r0, r1, r2


def flag_graph_bipartite(fs: FaceSet) -> bool:
    """Orientability read off the flag graph: bipartite iff orientable."""
    r0, r1, r2 = flag_involutions(fs)
    side: dict[Flag, int] = {}
    for s in flags(fs):
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for r in (r0, r1, r2):
                y = r[x]
                if y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def petrie_lengths(fs: FaceSet) -> list[int]:
    """Edge lengths of the Petrie walks (zig-zags) of the map, sorted.

    One step of a Petrie walk moves along an edge and switches face while
    alternating the turn; as a flag permutation that is ``r2 r1 r0``. Each
    walk is traced by two flag orbits (one per direction) and counted once.
    """
    r0, r1, r2 = flag_involutions(fs)
    step = {f: r2[r1[r0[f]]] for f in r0}
    seen: set[Flag] = set()
    walks: dict[tuple[int, ...], int] = {}
    for s in sorted(step):
        if s in seen:
            continue
        n, x = 0, s
        used = []
        while x not in seen:
            seen.add(x)
            used.append(fs.edge_ids[x[0]][x[1]])
            x = step[x]
            n += 1
        walks[tuple(sorted(used))] = n
    return sorted(walks.values())


def dual_graph(fs: FaceSet) -> Graph:
    """Faces adjacent when they share an edge (simple graph)."""
    from .graph import make_graph

    occ = _occurrences(fs)
    pairs = set()
    for (ja, _), (jb, _) in occ.values():
        if ja != jb:
            pairs.add((min(ja, jb), max(ja, jb)))
    return make_graph(len(fs.walks), sorted(pairs))
