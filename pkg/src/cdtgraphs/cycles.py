"""Girth cycles, paths of fixed order, and their incidence structure.

Cycles and paths are plain vertex tuples kept in canonical form:

* a cycle starts at its least vertex and runs towards the smaller of that
  vertex's two cycle neighbours;
* a path runs from its smaller endpoint.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, GraphError, bfs_distances, girth

Cycle = tuple[int, ...]
Path = tuple[int, ...]


def canonical_cycle(seq: Sequence[int]) -> Cycle:
    seq = tuple(seq)
    if not seq:
        return seq
    i = seq.index(min(seq))
    fwd = seq[i:] + seq[:i]
    back = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, back)


def canonical_path(seq: Sequence[int]) -> Path:
    seq = tuple(seq)
    return min(seq, seq[::-1])


def is_cycle_of(G: Graph, seq: Sequence[int]) -> bool:
    n = len(seq)
    if n < 3 or len(set(seq)) != n:
        return False
    return all(G.has_edge(seq[i], seq[(i + 1) % n]) for i in range(n))


def is_path_of(G: Graph, seq: Sequence[int]) -> bool:
    if len(set(seq)) != len(seq) or not seq:
        return False
    return all(G.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def cycles_of_length(G: Graph, length: int) -> list[Cycle]:
    """All cycles with ``length`` vertices, canonical and sorted.

    Each cycle is grown from its least vertex ``s`` through larger vertices
    only; a branch is cut once the walk cannot return to ``s`` in time.
    """
    found: set[Cycle] = set()
    for s in range(G.n):
        dist = bfs_distances(G, s)
        path = [s]
        on_path = {s}

        def grow(v: int):
            for w in G.adjacency[v]:
                if w == s and len(path) == length:
                    if path[1] < path[-1]:
                        found.add(tuple(path))
                elif w > s and w not in on_path and len(path) < length:
                    if 0 <= dist[w] <= length - len(path):
                        path.append(w)
                        on_path.add(w)
                        grow(w)
                        on_path.discard(w)
                        path.pop()

        grow(s)
    return sorted(found)


def girth_cycles(G: Graph) -> list[Cycle]:
    g = girth(G)
    if g is None:
        return []
    return cycles_of_length(G, g)


def paths_of_order(G: Graph, m: int) -> list[Path]:
    """All paths with ``m`` vertices, canonical and sorted."""
    if m < 2:
        raise GraphError("paths need at least two vertices")
    out: list[Path] = []

    def grow(path: list[int]):
        if len(path) == m:
            if path[0] < path[-1]:
                out.append(tuple(path))
            return
        for w in G.adjacency[path[-1]]:
            if w not in path:
                path.append(w)
                grow(path)
                path.pop()

    for v in range(G.n):
        grow([v])
    return sorted(out)


def windows(cycle: Sequence[int], m: int):
    """Yield ``(start, path)`` for the ``len(cycle)`` directed m-vertex
    subpaths read along the cycle."""
    g = len(cycle)
    for i in range(g):
        yield i, tuple(cycle[(i + j) % g] for j in range(m))


def path_incidence(cycles: Sequence[Sequence[int]], m: int) -> dict[Path, list[tuple[int, int]]]:
    """Map each canonical m-vertex path to ``(cycle index, direction)`` pairs.

    Direction is +1 when the cycle, read in its stored order, traverses the
    path from its canonical start, -1 otherwise.
    """
    inc: dict[Path, list[tuple[int, int]]] = defaultdict(list)
    for ci, cyc in enumerate(cycles):
        for _, p in windows(cyc, m):
            key = canonical_path(p)
            inc[key].append((ci, 1 if key == p else -1))
    return dict(inc)


def cycles_through_path(G: Graph, cycles: Sequence[Cycle], path: Sequence[int]) -> list[Cycle]:
    if not is_path_of(G, path):
        raise GraphError(f"{tuple(path)} is not a path of the graph")
    key = canonical_path(path)
    m = len(key)
    return [c for c in cycles if any(canonical_path(p) == key for _, p in windows(c, m))]


def _edges_of_cycle(c: Sequence[int]) -> set[frozenset[int]]:
    return {frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))}


def _edges_of_path(p: Sequence[int]) -> set[frozenset[int]]:
    return {frozenset(e) for e in zip(p, p[1:])}


@dataclass
class FastenedReport:
    """Multiplicities of girth cycles through paths of decreasing order."""

    g: int
    k: int
    orders: list[int] = field(default_factory=list)
    mu: list[int | None] = field(default_factory=list)
    constant: list[bool] = field(default_factory=list)
    exact_sharing: list[bool] = field(default_factory=list)
    exact_meeting: list[list[int]] = field(default_factory=list)
    law_2_pow_i: bool = False
    law_2_pow_i_plus_1: bool = False

    @property
    def mu0_is_two(self) -> bool:
        return bool(self.mu) and self.mu[0] == 2

    @property
    def passed(self) -> bool:
        """Constant multiplicities, two cycles through each longest path, and
        those two meeting in nothing but the path."""
        return all(self.constant) and bool(self.exact_sharing) and self.exact_sharing[0] and self.mu0_is_two

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "k": self.k,
            "orders": self.orders,
            "mu": self.mu,
            "constant": self.constant,
            "exact_sharing": self.exact_sharing,
            "exact_meeting": self.exact_meeting,
            "mu0_is_two": self.mu0_is_two,
            "law_2_pow_i": self.law_2_pow_i,
            "law_2_pow_i_plus_1": self.law_2_pow_i_plus_1,
            "passed": self.passed,
        }


def check_sf_uh(G: Graph, g: int, k: int, cycles: Sequence[Cycle] | None = None) -> FastenedReport:
    """Measure, for i = 0..k-2, how many girth cycles pass through each path
    on k-i vertices and whether any two of them meet only in that path.

    ``exact_meeting[i]`` lists the distinct numbers of other girth cycles
    meeting a given cycle in exactly one of its subpaths on k-i vertices.
    """
    if cycles is None:
        cycles = cycles_of_length(G, g)
    report = FastenedReport(g, k)
    cyc_vertices = [set(c) for c in cycles]
    cyc_edges = [_edges_of_cycle(c) for c in cycles]
    for i in range(k - 1):
        m = k - i
        inc = path_incidence(cycles, m)
        counts = set()
        exact = True
        for p in paths_of_order(G, m):
            through = sorted({ci for ci, _ in inc.get(p, [])})
            counts.add(len(through))
            pv, pe = set(p), _edges_of_path(p)
            for a_i, a in enumerate(through):
                for b in through[a_i + 1:]:
                    if cyc_vertices[a] & cyc_vertices[b] != pv or cyc_edges[a] & cyc_edges[b] != pe:
                        exact = False
        report.orders.append(m)
        report.constant.append(len(counts) == 1)
        report.mu.append(counts.pop() if len(counts) == 1 else None)
        report.exact_sharing.append(exact)
        meet = set()
        for a, c in enumerate(cycles):
            for _, p in windows(c, m):
                pv, pe = set(p), _edges_of_path(p)
                others = {ci for ci, _ in inc[canonical_path(p)]} - {a}
                meet.add(sum(1 for b in others if cyc_vertices[a] & cyc_vertices[b] == pv
                              and cyc_edges[a] & cyc_edges[b] == pe))
        report.exact_meeting.append(sorted(meet))
    report.law_2_pow_i = all(mu == 2**i for i, mu in enumerate(report.mu))
    report.law_2_pow_i_plus_1 = all(mu == 2 ** (i + 1) for i, mu in enumerate(report.mu))
    return report


@dataclass(frozen=True)
class CyclePathUH:
    cycles_transitive: bool
    cycle_stabiliser_dihedral: bool
    paths_transitive: bool
    path_stabiliser_flip: bool

    @property
    def passed(self) -> bool:
        return all((self.cycles_transitive, self.cycle_stabiliser_dihedral,
                    self.paths_transitive, self.path_stabiliser_flip))

    def __bool__(self) -> bool:
        return self.passed


def check_cycle_path_uh(G: Graph, aut, k: int | None = None) -> CyclePathUH:
    """Girth-cycle and k-vertex-path ultrahomogeneity from the group action."""
    from .symmetry import arc_transitivity, induced_action_is_full, set_orbit

    if k is None:
        k = arc_transitivity(G, aut)
    cycles = girth_cycles(G)
    paths = paths_of_order(G, k)
    corbit = set_orbit(cycles[0], aut.generators)
    porbit = set_orbit(paths[0], aut.generators)
    return CyclePathUH(
        all(frozenset(c) in corbit for c in cycles),
        induced_action_is_full(G, aut, list(cycles[0])),
        all(frozenset(p) in porbit for p in paths),
        induced_action_is_full(G, aut, list(paths[0])),
    )
