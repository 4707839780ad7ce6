"""Isomorphism and automorphism search by colour refinement and backtracking.

Both graphs of an isomorphism problem are refined jointly: their vertex sets
are laid side by side and every refinement round recolours the union, so a
colour class means the same thing on either side. Branching individualises
the first vertex of the smallest non-trivial class on the left and tries each
candidate of that class on the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping, Sequence, TypeVar

from .graph import Graph, GraphError, induced_subgraph, is_connected

Perm = tuple[int, ...]
T = TypeVar("T", bound=Hashable)


@dataclass(frozen=True)
class GroupDescription:
    generators: tuple[Perm, ...]
    order: int
    base: tuple[int, ...] = ()
    orbit_sizes: tuple[int, ...] = ()


@dataclass(frozen=True)
class IsoMapping:
    mapping: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def inverse(self) -> IsoMapping:
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return IsoMapping(tuple(inv))


class _Pair:
    """Two graphs laid side by side: vertex ``v`` of H is ``n + v``."""

    def __init__(self, G: Graph, H: Graph):
        self.G, self.H, self.n = G, H, G.n
        n = G.n
        self.adj: list[list[tuple[int, int]]] = []
        for X, off in ((G, 0), (H, n)):
            for v in range(X.n):
                self.adj.append([(w + off, X.mult(v, w)) for w in X.adjacency[v]])

    def refine(self, colors: list[int]) -> list[int] | None:
        """Equitable refinement; None as soon as the two sides disagree."""
        n = self.n
        adj = self.adj
        ncls = len(set(colors))
        while True:
            sigs = [
                (colors[v], tuple(sorted((colors[w], m) for w, m in adj[v])))
                for v in range(2 * n)
            ]
            table = {s: i for i, s in enumerate(sorted(set(sigs)))}
            new = [table[s] for s in sigs]
            left = sorted(new[:n])
            if left != sorted(new[n:]):
                return None
            if len(table) == ncls:
                return new
            colors, ncls = new, len(table)

    def check(self, mapping: Sequence[int]) -> bool:
        G, H = self.G, self.H
        for u in range(G.n):
            for w in G.adjacency[u]:
                if H.mult(mapping[u], mapping[w]) != G.mult(u, w):
                    return False
        return True

    def search(self, colors: list[int]) -> Perm | None:
        colors = self.refine(colors)
        if colors is None:
            return None
        n = self.n
        cells: dict[int, tuple[list[int], list[int]]] = {}
        for v in range(2 * n):
            side = cells.setdefault(colors[v], ([], []))
            side[v >= n].append(v if v < n else v - n)
        target = None
        for c in sorted(cells):
            left, right = cells[c]
            if len(left) > 1 and (target is None or len(left) < len(cells[target][0])):
                target = c
        if target is None:
            mapping = [0] * n
            for left, right in cells.values():
                mapping[left[0]] = right[0]
            return tuple(mapping) if self.check(mapping) else None
        left, right = cells[target]
        x = left[0]
        fresh = max(colors) + 1
        for y in right:
            trial = list(colors)
            trial[x] = fresh
            trial[n + y] = fresh
            found = self.search(trial)
            if found is not None:
                return found
        return None


def _initial(G: Graph, H: Graph, cg: Sequence[Hashable] | None, ch: Sequence[Hashable] | None):
    cg = list(cg) if cg is not None else [0] * G.n
    ch = list(ch) if ch is not None else [0] * H.n
    table = {c: i for i, c in enumerate(sorted(set(cg) | set(ch), key=repr))}
    return [table[c] for c in cg] + [table[c] for c in ch]


def find_isomorphism(
    G: Graph,
    H: Graph,
    colors_g: Sequence[Hashable] | None = None,
    colors_h: Sequence[Hashable] | None = None,
    partial: Mapping[int, int] | None = None,
) -> IsoMapping | None:
    """An adjacency- (and multiplicity-) preserving bijection G -> H, or None.

    Optional vertex colourings must be preserved. ``partial`` pins some
    images in advance.
    """
    if G.n != H.n or G.edge_count != H.edge_count:
        return None
    if sorted(G.degrees()) != sorted(H.degrees()):
        return None
    pair = _Pair(G, H)
    colors = _initial(G, H, colors_g, colors_h)
    if partial:
        fresh = max(colors, default=0) + 1
        for i, (x, y) in enumerate(sorted(partial.items())):
            if colors[x] != colors[G.n + y]:
                return None
            colors[x] = colors[G.n + y] = fresh + i
    found = pair.search(colors)
    return IsoMapping(found) if found is not None else None


def are_isomorphic(G: Graph, H: Graph) -> IsoMapping | None:
    return find_isomorphism(G, H)


def extend_to_automorphism(
    G: Graph, partial: Mapping[int, int], colors: Sequence[Hashable] | None = None
) -> Perm | None:
    """An automorphism agreeing with ``partial``, or None if none exists."""
    found = find_isomorphism(G, G, colors, colors, partial)
    return found.mapping if found is not None else None


def orbit(start: T, generators: Iterable[Callable[[T], T]]) -> set[T]:
    gens = list(generators)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g(x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def point_orbit(v: int, generators: Iterable[Perm]) -> set[int]:
    return orbit(v, [p.__getitem__ for p in generators])


def set_orbit(vertices: Iterable[int], generators: Iterable[Perm]) -> set[frozenset[int]]:
    def action(p):
        return lambda s: frozenset(p[v] for v in s)

    return orbit(frozenset(vertices), [action(p) for p in generators])


def tuple_orbit(seq: Sequence[int], generators: Iterable[Perm]) -> set[tuple[int, ...]]:
    def action(p):
        return lambda t: tuple(p[v] for v in t)

    return orbit(tuple(seq), [action(p) for p in generators])


def automorphism_group(G: Graph, colors: Sequence[Hashable] | None = None) -> GroupDescription:
    """Generators and order of the (colour-preserving) automorphism group.

    The order is accumulated level by level as a product of basic orbit
    sizes: at each level the stabiliser of the base fixed so far is searched
    for an element sending the next base point to every candidate.
    """
    if G.n == 0:
        return GroupDescription((), 1)
    pair = _Pair(G, G)
    start = _initial(G, G, colors, colors)
    base: list[int] = []
    generators: list[Perm] = []
    sizes: list[int] = []
    order = 1
    while True:
        colors_now = list(start)
        fresh = max(start) + 1
        for i, b in enumerate(base):
            colors_now[b] = colors_now[G.n + b] = fresh + i
        refined = pair.refine(colors_now)
        assert refined is not None
        cells: dict[int, list[int]] = {}
        for v in range(G.n):
            cells.setdefault(refined[v], []).append(v)
        nontrivial = [c for c in cells.values() if len(c) > 1]
        if not nontrivial:
            break
        cell = min(nontrivial, key=lambda c: (len(c), c[0]))
        b = cell[0]
        level_gens: list[Perm] = []
        reached = {b}
        for w in cell:
            if w in reached:
                continue
            trial = list(refined)
            trial[b] = trial[G.n + w] = max(refined) + 1
            found = pair.search(trial)
            if found is not None:
                level_gens.append(found)
                reached = point_orbit(b, level_gens)
        generators.extend(level_gens)
        sizes.append(len(reached))
        order *= len(reached)
        base.append(b)
    return GroupDescription(tuple(generators), order, tuple(base), tuple(sizes))


def is_automorphism(G: Graph, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(G.n)):
        return False
    return all(G.mult(perm[u], perm[w]) == G.mult(u, w) for u, w in G.edges())


def is_vertex_transitive(G: Graph, aut: GroupDescription) -> bool:
    return G.n == 0 or len(point_orbit(0, aut.generators)) == G.n


def t_arcs(G: Graph, t: int) -> list[tuple[int, ...]]:
    """All t-arcs: walks v0..vt with no immediate backtracking."""
    arcs = [(v,) for v in range(G.n)]
    for _ in range(t):
        arcs = [a + (w,) for a in arcs for w in G.adjacency[a[-1]] if len(a) < 2 or w != a[-2]]
    return arcs


def first_arc(G: Graph, t: int) -> tuple[int, ...]:
    """The lexicographically first t-arc starting at vertex 0."""
    arc = [0]
    for _ in range(t):
        arc.append(min(w for w in G.adjacency[arc[-1]] if len(arc) < 2 or w != arc[-2]))
    return tuple(arc)


class NotVertexTransitive(GraphError):
    pass


def arc_transitivity(G: Graph, aut: GroupDescription) -> int:
    """Largest t with the group transitive on t-arcs.

    For a cycle every t works; the search is capped at ``G.n``.
    """
    if not is_connected(G):
        raise GraphError("arc transitivity needs a connected graph")
    if not is_vertex_transitive(G, aut):
        raise NotVertexTransitive("graph is not vertex-transitive")
    d = len(G.adjacency[0]) if G.n else 0
    if d == 0:
        return 0
    t = 0
    while t < G.n:
        total = G.n * d * (d - 1) ** t
        if total > aut.order or len(tuple_orbit(first_arc(G, t + 1), aut.generators)) != total:
            return t
        t += 1
    return t


def induced_action_is_full(
    G: Graph, aut: GroupDescription, member: Sequence[int]
) -> bool:
    """Does the setwise stabiliser of ``member`` induce all of its symmetries?

    Every automorphism of the induced subgraph must extend to G; checking a
    generating set suffices since the extendable maps form a group.
    """
    sub = induced_subgraph(G, member)
    for gen in automorphism_group(sub).generators:
        partial = {member[i]: member[gen[i]] for i in range(len(member))}
        if extend_to_automorphism(G, partial) is None:
            return False
    return True


def family_is_uh(G: Graph, aut: GroupDescription, members: Sequence[Sequence[int]]) -> bool:
    """Every isomorphism between two members extends to an automorphism.

    Equivalent to: one member's orbit (as a vertex set) covers the family,
    and that member's stabiliser induces its full automorphism group.
    """
    if not members:
        return True
    reach = set_orbit(members[0], aut.generators)
    if not all(frozenset(m) in reach for m in members):
        return False
    return induced_action_is_full(G, aut, list(members[0]))


def group_order_bruteforce(G: Graph) -> int:
    """Count automorphisms by plain extension without refinement.

    Independent of the refinement machinery; practical only for small graphs.
    """
    order_vs = []
    seen = set()
    for s in range(G.n):
        if s in seen:
            continue
        queue = [s]
        seen.add(s)
        while queue:
            u = queue.pop(0)
            order_vs.append(u)
            for w in G.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    image = [-1] * G.n
    used = [False] * G.n
    count = 0

    def go(i: int):
        nonlocal count
        if i == G.n:
            count += 1
            return
        v = order_vs[i]
        placed = order_vs[:i]
        for c in range(G.n):
            if used[c] or G.degree(c) != G.degree(v):
                continue
            if all(G.mult(v, u) == G.mult(c, image[u]) for u in placed):
                image[v] = c
                used[c] = True
                go(i + 1)
                used[c] = False
                image[v] = -1

    go(0)
    return count
