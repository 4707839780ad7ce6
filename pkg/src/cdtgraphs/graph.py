"""Finite graph representation and the generic algorithms built on it.

Vertices are the integers ``0 .. n-1``. A graph is simple unless it carries
an ``multiplicity`` map, in which case parallel edges are allowed and each
adjacent pair records how many edges join it.
"""

from __future__ import annotations

import itertools
import json
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


class GraphError(ValueError):
    pass


Edge = tuple[int, int]


def _pair(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    multiplicity: Mapping[Edge, int] | None = None
    edge_labels: Mapping[tuple[int, int, int], str] | None = None
    _label_index: dict[str, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise GraphError("one label per vertex required")
            index = {lab: i for i, lab in enumerate(self.labels)}
            if len(index) != self.n:
                raise GraphError("vertex labels must be distinct")
            self._label_index.update(index)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.adjacency, self.edge_multiset()) == (
            other.n,
            other.adjacency,
            other.edge_multiset(),
        )

    __hash__ = None

    @property
    def is_simple(self) -> bool:
        return self.multiplicity is None or all(m == 1 for m in self.multiplicity.values())

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        if self.multiplicity is None:
            return len(self.adjacency[v])
        return sum(self.multiplicity[_pair(v, w)] for w in self.adjacency[v])

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def mult(self, u: int, v: int) -> int:
        if not self.has_edge(u, v):
            return 0
        return 1 if self.multiplicity is None else self.multiplicity[_pair(u, v)]

    def edges(self) -> list[Edge]:
        """Distinct adjacent pairs ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def edge_multiset(self) -> list[Edge]:
        return [e for e in self.edges() for _ in range(self.mult(*e))]

    @property
    def edge_count(self) -> int:
        return len(self.edge_multiset())

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        try:
            return self._label_index[label]
        except KeyError:
            raise GraphError(f"no vertex labelled {label!r}") from None

    def is_regular(self, d: int | None = None) -> bool:
        degs = set(self.degrees())
        if d is None:
            return len(degs) <= 1
        return degs <= {d} and (self.n == 0 or degs == {d})

    def simple(self) -> Graph:
        """The underlying simple graph (multiplicities dropped)."""
        return make_graph(self.n, self.edges(), labels=self.labels)

    def to_dict(self) -> dict:
        data: dict = {"n": self.n, "edges": [list(e) for e in self.edges()]}
        if self.labels is not None:
            data["labels"] = list(self.labels)
        if self.multiplicity is not None:
            data["multiplicity"] = [self.multiplicity[e] for e in self.edges()]
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            lines.append(f'  {v} [label="{self.label(v)}"];')
        for u, v in self.edges():
            for i in range(self.mult(u, v)):
                lab = (self.edge_labels or {}).get((u, v, i))
                attr = f' [label="{lab}"]' if lab is not None else ""
                lines.append(f"  {u} -- {v}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def make_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    labels: Sequence[str] | None = None,
    multigraph: bool = False,
    edge_labels: Sequence[str | None] | None = None,
) -> Graph:
    """Build a graph on ``n`` vertices from a list of vertex pairs.

    In simple mode a repeated pair is an error; with ``multigraph=True``
    repeats are counted as parallel edges. ``edge_labels``, if given, runs
    parallel to ``edges``.
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    counts: dict[Edge, int] = {}
    elabels: dict[tuple[int, int, int], str] = {}
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        e = _pair(u, v)
        if e in counts and not multigraph:
            raise GraphError(f"duplicate edge {e} in a simple graph")
        if edge_labels is not None and edge_labels[i] is not None:
            elabels[(e[0], e[1], counts.get(e, 0))] = edge_labels[i]
        counts[e] = counts.get(e, 0) + 1
        nbrs[u].add(v)
        nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    return Graph(
        n,
        adjacency,
        labels=tuple(labels) if labels is not None else None,
        multiplicity=counts if multigraph else None,
        edge_labels=elabels or None,
    )


def graph_from_dict(data: Mapping) -> Graph:
    edges = [tuple(e) for e in data["edges"]]
    mult = data.get("multiplicity")
    if mult is not None:
        if len(mult) != len(edges):
            raise GraphError("multiplicity list must run parallel to edges")
        edges = [e for e, m in zip(edges, mult) for _ in range(m)]
    return make_graph(data["n"], edges, labels=data.get("labels"), multigraph=mult is not None)


def graph_from_json(text: str) -> Graph:
    return graph_from_dict(json.loads(text))


# -- traversal -------------------------------------------------------------


def bfs_distances(G: Graph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_matrix(G: Graph) -> list[list[int]]:
    return [bfs_distances(G, v) for v in range(G.n)]


def connected_components(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        comp = []
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in G.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(connected_components(G)) == 1


def diameter(G: Graph) -> int:
    best = 0
    for v in range(G.n):
        dist = bfs_distances(G, v)
        if min(dist) < 0:
            raise GraphError("diameter of a disconnected graph is undefined")
        best = max(best, max(dist))
    return best


def girth(G: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest.

    Parallel edges count as 2-cycles.
    """
    if not G.is_simple:
        return 2
    best = None
    for s in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in G.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def two_coloring(G: Graph) -> list[int] | None:
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(G: Graph) -> bool:
    return two_coloring(G) is not None


# -- hamiltonicity -----------------------------------------------------------


def find_hamiltonian_cycle(G: Graph, budget: float | None = 10.0) -> list[int] | None | bool:
    """Backtracking search for a Hamiltonian cycle.

    Returns the cycle as a vertex list, ``None`` when the search space was
    exhausted without finding one, or ``False`` if ``budget`` seconds ran
    out first.
    """
    n = G.n
    if n < 3:
        return None
    adj = G.adjacency
    deadline = None if budget is None else time.monotonic() + budget
    visited = [False] * n
    # free[v]: number of unvisited neighbours of v
    free = [len(adj[v]) for v in range(n)]
    path = [0]
    visited[0] = True
    for w in adj[0]:
        free[w] -= 1
    steps = 0

    class _Timeout(Exception):
        pass

    def feasible(cur: int) -> bool:
        # every unvisited vertex needs two usable neighbours; cur and the
        # start vertex 0 still count as usable
        for v in range(n):
            if not visited[v]:
                avail = free[v] + (cur in adj[v]) + (0 in adj[v] and cur != 0)
                if avail < 2:
                    return False
        return True

    def extend(cur: int) -> bool:
        nonlocal steps
        steps += 1
        if deadline is not None and steps % 2048 == 0 and time.monotonic() > deadline:
            raise _Timeout
        if len(path) == n:
            return 0 in adj[cur]
        # visit constrained neighbours first
        options = sorted((w for w in adj[cur] if not visited[w]), key=lambda w: (free[w], w))
        for w in options:
            visited[w] = True
            path.append(w)
            for x in adj[w]:
                free[x] -= 1
            if feasible(w) and extend(w):
                return True
            for x in adj[w]:
                free[x] += 1
            path.pop()
            visited[w] = False
        return False

    try:
        found = extend(0)
    except _Timeout:
        return False
    return list(path) if found else None


def is_hamiltonian(G: Graph, budget: float | None = 10.0) -> bool | None:
    """True/False, or None when the time budget ran out."""
    res = find_hamiltonian_cycle(G, budget)
    if res is False:
        return None
    return res is not None


@dataclass(frozen=True)
class GraphMetrics:
    diameter: int
    girth: int | None
    bipartite: bool
    hamiltonian: bool | None


def graph_metrics(G: Graph, hamiltonian_budget: float | None = 10.0) -> GraphMetrics:
    if not is_connected(G):
        raise GraphError("graph_metrics requires a connected graph")
    ham = None if hamiltonian_budget == 0 else is_hamiltonian(G, hamiltonian_budget)
    return GraphMetrics(diameter(G), girth(G), is_bipartite(G), ham)


# -- derived graphs ----------------------------------------------------------


def complement(G: Graph) -> Graph:
    edges = [(u, v) for u, v in itertools.combinations(range(G.n), 2) if not G.has_edge(u, v)]
    return make_graph(G.n, edges, labels=G.labels)


def line_graph(G: Graph) -> Graph:
    """Vertices are the edges of G in sorted order, labelled ``"u-v"``."""
    E = G.edges()
    index = {e: i for i, e in enumerate(E)}
    at: list[list[int]] = [[] for _ in range(G.n)]
    for i, (u, v) in enumerate(E):
        at[u].append(i)
        at[v].append(i)
    pairs = set()
    for inc in at:
        for a, b in itertools.combinations(inc, 2):
            pairs.add(_pair(a, b))
    labels = [f"{G.label(u)}-{G.label(v)}" for u, v in E]
    assert len(index) == len(E)
    return make_graph(len(E), sorted(pairs), labels=labels)


def power(G: Graph, k: int) -> Graph:
    """Join two vertices iff their distance in G is exactly ``k``."""
    if k < 1:
        raise GraphError("power requires k >= 1")
    dist = distance_matrix(G)
    if k > max((max(row) for row in dist), default=0):
        raise GraphError(f"k={k} exceeds the diameter")
    edges = [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if dist[u][v] == k]
    return make_graph(G.n, edges, labels=G.labels)


def induced_subgraph(G: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph, reindexed in the order ``vertices`` are given."""
    pos = {v: i for i, v in enumerate(vertices)}
    edges = []
    for u in vertices:
        for w in G.adjacency[u]:
            if w in pos and pos[u] < pos[w]:
                edges.extend([(pos[u], pos[w])] * G.mult(u, w))
    labels = [G.label(v) for v in vertices]
    return make_graph(len(vertices), edges, labels=labels, multigraph=not G.is_simple)


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Move vertex ``v`` to position ``perm[v]``; labels travel with vertices."""
    edges = [(perm[u], perm[v]) for u, v in G.edge_multiset()]
    labels = None
    if G.labels is not None:
        labels = [""] * G.n
        for v in range(G.n):
            labels[perm[v]] = G.labels[v]
    return make_graph(G.n, edges, labels=labels, multigraph=not G.is_simple)


def complete_graph(n: int) -> Graph:
    return make_graph(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# -- cliques and colouring ---------------------------------------------------


def cliques_of_size(G: Graph, s: int) -> list[tuple[int, ...]]:
    """All vertex sets of size ``s`` inducing a complete graph, sorted."""
    if s < 1:
        raise GraphError("clique size must be positive")
    higher = [set(w for w in G.adjacency[v] if w > v) for v in range(G.n)]
    out: list[tuple[int, ...]] = []

    def grow(clique: list[int], cand: set[int]):
        if len(clique) == s:
            out.append(tuple(clique))
            return
        for w in sorted(cand):
            if len(clique) + 1 + len(cand) < s:
                break
            clique.append(w)
            grow(clique, cand & higher[w])
            clique.pop()

    for v in range(G.n):
        grow([v], set(higher[v]))
    return out


def clique_number(G: Graph) -> int:
    size = 1 if G.n else 0
    while cliques_of_size(G, size + 1):
        size += 1
    return size


MAX_CHROMATIC_VERTICES = 40


def find_coloring(G: Graph, colors: int) -> list[int] | None:
    """A proper colouring with at most ``colors`` colours, or None.

    DSATUR ordering with symmetry breaking on new colours.
    """
    n = G.n
    adj = G.adjacency
    assignment = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if assignment[v] < 0:
                k = (len(sat[v]), len(adj[v]), -v)
                if key is None or k > key:
                    best, key = v, k
        return best

    def solve(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        for c in range(min(used + 1, colors)):
            if c in sat[v]:
                continue
            assignment[v] = c
            touched = [w for w in adj[v] if assignment[w] < 0 and c not in sat[w]]
            for w in touched:
                sat[w].add(c)
            if solve(done + 1, max(used, c + 1)):
                return True
            for w in touched:
                sat[w].discard(c)
            assignment[v] = -1
        return False

    return assignment if solve(0, 0) else None


def chromatic_number(G: Graph) -> int:
    if G.n > MAX_CHROMATIC_VERTICES:
        raise GraphError(f"exact colouring limited to {MAX_CHROMATIC_VERTICES} vertices")
    if G.n == 0:
        return 0
    k = clique_number(G)
    while find_coloring(G, k) is None:
        k += 1
    return k
