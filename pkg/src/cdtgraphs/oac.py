"""Orientation assignments of girth cycles.

An orientation assignment chooses a direction for every girth cycle so that
the two cycles through each k-vertex path traverse it in opposite
directions. Give each cycle a bit (0 = its canonical direction). For a path
shared by cycles A and B the requirement is ``bit_A xor bit_B = flip`` where
``flip`` is 1 exactly when the canonical traversals of A and B run the same
way along the path. Existence is therefore a balance question on a signed
graph over the cycles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .cycles import Cycle, canonical_cycle, canonical_path, girth_cycles, path_incidence, windows
from .graph import Graph, GraphError, girth


class OACError(ValueError):
    pass


def direction_bit(directed: Sequence[int]) -> int:
    """0 if ``directed`` runs the same way as its canonical form, else 1."""
    directed = tuple(directed)
    i = directed.index(min(directed))
    return 0 if directed[i:] + directed[:i] == canonical_cycle(directed) else 1


def orient(cycle: Cycle, bit: int) -> Cycle:
    """The canonical cycle read forwards (bit 0) or backwards (bit 1)."""
    return cycle if not bit else (cycle[0],) + tuple(reversed(cycle[1:]))


@dataclass(frozen=True)
class OrientedCycleSet:
    """One directed traversal per girth cycle, ordered by canonical cycle."""

    cycles: tuple[Cycle, ...]
    names: tuple[str, ...] | None = None

    @classmethod
    def from_directed(cls, directed: Sequence[Sequence[int]], names: Sequence[str] | None = None):
        order = sorted(range(len(directed)), key=lambda i: canonical_cycle(directed[i]))
        return cls(
            tuple(tuple(directed[i]) for i in order),
            tuple(names[i] for i in order) if names is not None else None,
        )

    @classmethod
    def from_bits(cls, cycles: Sequence[Cycle], bits: Sequence[int]):
        return cls(tuple(orient(c, b) for c, b in zip(cycles, bits)))

    def __len__(self) -> int:
        return len(self.cycles)

    @property
    def underlying(self) -> list[Cycle]:
        return [canonical_cycle(c) for c in self.cycles]

    @property
    def bits(self) -> list[int]:
        return [direction_bit(c) for c in self.cycles]

    def flipped(self, indices) -> OrientedCycleSet:
        flip = set(indices)
        return OrientedCycleSet(
            tuple(tuple(reversed(c)) if i in flip else c for i, c in enumerate(self.cycles)),
            self.names,
        )

    def to_dict(self, G: Graph | None = None) -> dict:
        lab = (lambda v: G.label(v)) if G is not None else (lambda v: v)
        data: dict = {"cycles": [[lab(v) for v in c] for c in self.cycles]}
        if self.names is not None:
            data["names"] = list(self.names)
        return data

    @classmethod
    def from_dict(cls, data: dict, G: Graph | None = None) -> OrientedCycleSet:
        idx = (lambda v: G.index(str(v))) if G is not None else int
        return cls.from_directed([[idx(v) for v in c] for c in data["cycles"]], data.get("names"))


@dataclass(frozen=True)
class ConstraintEdge:
    a: int
    b: int
    path: tuple[int, ...]
    flip: bool


@dataclass(frozen=True)
class ConstraintGraph:
    cycles: tuple[Cycle, ...]
    k: int
    edges: tuple[ConstraintEdge, ...]
    unconstrained_paths: int = 0

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per cycle, ``(edge index, other cycle)`` pairs in edge order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in self.cycles]
        for ei, e in enumerate(self.edges):
            adj[e.a].append((ei, e.b))
            adj[e.b].append((ei, e.a))
        return adj

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen = [False] * len(self.cycles)
        comps = []
        for s in range(len(self.cycles)):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [], deque([s])
            while queue:
                x = queue.popleft()
                comp.append(x)
                for _, y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        queue.append(y)
            comps.append(sorted(comp))
        return comps


def build_constraint_graph(G: Graph, cycles: Sequence[Cycle], k: int) -> ConstraintGraph:
    """One signed edge per k-vertex path lying on two girth cycles.

    A path on only one cycle imposes nothing; a path on three or more
    cycles means the input is not of the kind this construction targets.
    """
    cycles = tuple(cycles)
    inc = path_incidence(cycles, k)
    edges = []
    loose = 0
    for path in sorted(inc):
        pairs = inc[path]
        if len(pairs) == 1:
            loose += 1
            continue
        if len(pairs) != 2:
            raise OACError(f"path {path} lies on {len(pairs)} girth cycles, expected 2")
        (a, da), (b, db) = sorted(pairs)
        if a == b:
            raise OACError(f"path {path} occurs twice on one cycle")
        edges.append(ConstraintEdge(a, b, path, da == db))
    return ConstraintGraph(cycles, k, tuple(edges), loose)


@dataclass(frozen=True)
class ObstructionCertificate:
    """Closed chain ``cycles[0], paths[0], cycles[1], ..., paths[-1], cycles[0]``.

    ``paths[i]`` is shared by ``cycles[i]`` and ``cycles[i+1]`` (indices mod
    the length). An odd number of flip constraints around the chain makes
    every orientation choice inconsistent.
    """

    cycles: tuple[Cycle, ...]
    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def to_dict(self, G: Graph | None = None) -> dict:
        lab = (lambda v: G.label(v)) if G is not None else (lambda v: v)
        return {
            "obstruction": [
                {"cycle": [lab(v) for v in c], "shared_path": [lab(v) for v in p]}
                for c, p in zip(self.cycles, self.paths)
            ]
        }


def verify_certificate(G: Graph, cert: ObstructionCertificate, k: int) -> bool:
    """Re-derive every link of the chain from G and check the parity is odd."""
    m = len(cert.cycles)
    if m == 0 or len(cert.paths) != m:
        return False
    flips = 0
    for i in range(m):
        a, b, p = cert.cycles[i], cert.cycles[(i + 1) % m], tuple(cert.paths[i])
        if len(p) != k:
            return False
        for c in (a, b):
            if not all(G.has_edge(c[j], c[(j + 1) % len(c)]) for j in range(len(c))):
                return False
        da = _traversal(a, p)
        db = _traversal(b, p)
        if da is None or db is None or canonical_cycle(a) == canonical_cycle(b):
            return False
        # bits relative to the stored directions of a and b
        flips += da == db
    return flips % 2 == 1


def _traversal(cycle: Sequence[int], path: Sequence[int]) -> int | None:
    path = tuple(path)
    for _, w in windows(cycle, len(path)):
        if w == path:
            return 1
        if w == path[::-1]:
            return -1
    return None


def chain_certificate(G: Graph, chain: Sequence[Sequence[int]], k: int) -> ObstructionCertificate:
    """Turn a closed chain of cycles into a certificate by locating the
    unique k-vertex path shared by each consecutive pair."""
    paths = []
    m = len(chain)
    for i in range(m):
        a, b = chain[i], chain[(i + 1) % m]
        wb = {canonical_path(p) for _, p in windows(b, k)}
        shared = sorted({canonical_path(p) for _, p in windows(a, k)} & wb)
        if len(shared) != 1:
            raise OACError(f"cycles {i} and {(i + 1) % m} share {len(shared)} paths on {k} vertices")
        paths.append(shared[0])
    return ObstructionCertificate(tuple(tuple(c) for c in chain), tuple(paths))


def solve_oa(cg: ConstraintGraph) -> OrientedCycleSet | ObstructionCertificate:
    """Propagate orientation bits along a breadth-first spanning forest.

    The least cycle of each component keeps its canonical direction. The
    first non-tree edge that disagrees yields the fundamental cycle through
    it as an obstruction.
    """
    n = len(cg.cycles)
    adj = cg.adjacency()
    bit = [-1] * n
    parent: list[tuple[int, int] | None] = [None] * n
    depth = [0] * n
    for root in range(n):
        if bit[root] >= 0:
            continue
        bit[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for ei, y in adj[x]:
                want = bit[x] ^ cg.edges[ei].flip
                if bit[y] < 0:
                    bit[y] = want
                    parent[y] = (x, ei)
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif bit[y] != want:
                    return _fundamental_cycle(cg, parent, depth, x, y, ei)
    return OrientedCycleSet.from_bits(cg.cycles, bit)


def _fundamental_cycle(cg, parent, depth, x, y, ei) -> ObstructionCertificate:
    # climb both ends to their lowest common ancestor
    up_x, up_y = [x], [y]
    ex, ey = [], []
    a, b = x, y
    while depth[a] > depth[b]:
        a, e = parent[a]
        up_x.append(a)
        ex.append(e)
    while depth[b] > depth[a]:
        b, e = parent[b]
        up_y.append(b)
        ey.append(e)
    while a != b:
        a, e = parent[a]
        up_x.append(a)
        ex.append(e)
        b, e = parent[b]
        up_y.append(b)
        ey.append(e)
    # walk: lca ... x -(ei)- y ... back to lca
    nodes = list(reversed(up_x)) + up_y[:-1]
    edge_ids = list(reversed(ex)) + [ei] + ey
    return ObstructionCertificate(
        tuple(cg.cycles[i] for i in nodes),
        tuple(cg.edges[e].path for e in edge_ids),
    )


def count_oacs(cg: ConstraintGraph) -> int:
    """Number of valid assignments: 2^components if balanced, else 0."""
    if isinstance(solve_oa(cg), ObstructionCertificate):
        return 0
    return 2 ** len(cg.components())


def validate_oac(G: Graph, oac: OrientedCycleSet, k: int) -> bool:
    """True iff every k-vertex path's two girth cycles run it oppositely."""
    cycles = girth_cycles(G)
    if sorted(oac.underlying) != cycles:
        raise OACError("oriented cycles are not exactly the girth cycles of the graph")
    for c in oac.cycles:
        if not all(G.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))):
            raise OACError(f"{c} is not a cycle of the graph")
    for path, pairs in path_incidence(oac.cycles, k).items():
        if len(pairs) == 2 and pairs[0][1] == pairs[1][1]:
            return False
        if len(pairs) > 2:
            return False
    return True


def same_up_to_component_flips(cg: ConstraintGraph, x: OrientedCycleSet, y: OrientedCycleSet) -> bool:
    bx, by = x.bits, y.bits
    for comp in cg.components():
        diffs = {bx[i] ^ by[i] for i in comp}
        if len(diffs) != 1:
            return False
    return True


@dataclass(frozen=True)
class KappaResult:
    kappa: int
    g: int
    k: int
    planar: bool | None
    solution: OrientedCycleSet | ObstructionCertificate
    components: int


def analyse_kappa(G: Graph, g: int | None = None, k: int | None = None) -> KappaResult:
    from .planarity import is_planar
    from .symmetry import arc_transitivity, automorphism_group

    if g is None:
        g = girth(G)
    if k is None:
        k = arc_transitivity(G, automorphism_group(G))
    if g is None:
        raise GraphError("graph has no cycles")
    cg = build_constraint_graph(G, girth_cycles(G), k)
    sol = solve_oa(cg)
    if isinstance(sol, ObstructionCertificate):
        return KappaResult(0, g, k, None, sol, len(cg.components()))
    planar = is_planar(G)
    if planar:
        kappa = 1
    elif g == 2 * (k - 1):
        kappa = 2
    else:
        kappa = 3
    return KappaResult(kappa, g, k, planar, sol, len(cg.components()))


def classify_kappa(G: Graph, g: int | None = None, k: int | None = None) -> int:
    return analyse_kappa(G, g, k).kappa
