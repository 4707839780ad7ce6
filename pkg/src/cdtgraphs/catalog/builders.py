"""Constructions of the twelve cubic distance-transitive graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..graph import Graph, make_graph
from .notation import LabeledVertexScheme


class UnknownGraph(KeyError):
    pass


@dataclass(frozen=True)
class CatalogGraph:
    name: str
    graph: Graph
    scheme: LabeledVertexScheme

    def v(self, name: str) -> int:
        return self.scheme.index(name)


def _cycle_edges(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def _finish(name: str, scheme: LabeledVertexScheme, edges) -> CatalogGraph:
    edges = sorted({(min(u, v), max(u, v)) for u, v in edges})
    return CatalogGraph(name, make_graph(scheme.n, edges, labels=scheme.names), scheme)


def _k4():
    s = LabeledVertexScheme("digits", 4)
    return _finish("k4", s, itertools.combinations(range(4), 2))


def _k33():
    s = LabeledVertexScheme("digits", 6)
    # K6 minus the triangles (1,3,5) and (2,4,0): odd joined to even
    return _finish("k33", s, [(a, b) for a in (1, 3, 5) for b in (2, 4, 0)])


def _q3():
    s = LabeledVertexScheme("digits", 8)
    pairs = "01 23 45 67 02 13 46 57 04 15 26 37".split()
    return _finish("q3", s, [(int(p[0]), int(p[1])) for p in pairs])


def _petersen():
    s = LabeledVertexScheme("letters", 10, prefixes=("u", "v"), modulus=5)
    u = lambda x: x % 5
    v = lambda x: 5 + x % 5
    edges = []
    for x in range(5):
        edges += [(u(x), u(x + 1)), (v(x), v(x + 2)), (u(x), v(x))]
    return _finish("petersen", s, edges)


def _heawood():
    s = LabeledVertexScheme("digits", 14)
    chords = [((2 * x) % 14, (5 + 2 * x) % 14) for x in range(1, 8)]
    return _finish("heawood", s, _cycle_edges(14) + chords)


def _pappus():
    s = LabeledVertexScheme("digits", 18)
    chords = []
    for x in range(3):
        for a, b in ((1, 6), (2, 9), (4, 11)):
            chords.append(((a + 6 * x) % 18, (b + 6 * x) % 18))
    return _finish("pappus", s, _cycle_edges(18) + chords)


def _dodecahedral():
    s = LabeledVertexScheme("letters", 20, prefixes=("a", "b", "c", "d"), modulus=5)
    a = lambda x: x % 5
    b = lambda x: 5 + x % 5
    c = lambda x: 10 + x % 5
    d = lambda x: 15 + x % 5
    edges = []
    for x in range(5):
        edges += [
            (a(x), a(x + 1)),
            (c(x), c(x + 1)),
            (a(x), d(x)),
            (b(x), c(x)),
            (d(x), b(x - 2)),
            (d(x), b(x + 2)),
        ]
    return _finish("dodecahedral", s, edges)


def _desargues():
    s = LabeledVertexScheme("blocks", 20, modulus=5, block_size=4)
    at = lambda x, j: 4 * (x % 5) + j
    chords = []
    for x in range(5):
        chords += [(at(x, 3), at(x + 2, 0)), (at(x, 1), at(x + 2, 2))]
    return _finish("desargues", s, _cycle_edges(20) + chords)


def _coxeter():
    s = LabeledVertexScheme("letters", 28, prefixes=("u", "v", "t", "z"), modulus=7)
    u = lambda x: x % 7
    v = lambda x: 7 + x % 7
    t = lambda x: 14 + x % 7
    z = lambda x: 21 + x % 7
    edges = []
    for x in range(7):
        edges += [(u(x), u(x + 1)), (v(x), v(x + 2)), (t(x), t(x + 3))]
        edges += [(z(x), u(x)), (z(x), v(x)), (z(x), t(x))]
    return _finish("coxeter", s, edges)


def _tutte():
    s = LabeledVertexScheme("blocks", 30, modulus=5, block_size=6)
    at = lambda x, j: 6 * (x % 5) + j
    chords = []
    for x in range(5):
        chords += [(at(x, 5), at(x + 2, 0)), (at(x, 1), at(x + 1, 4)), (at(x, 2), at(x + 2, 3))]
    return _finish("tutte", s, _cycle_edges(30) + chords)


def _foster():
    s = LabeledVertexScheme("blocks", 90, modulus=15, block_size=6)
    at = lambda x, j: 6 * (x % 15) + j
    chords = []
    for x in range(15):
        chords += [(at(x, 4), at(x + 2, 1)), (at(x, 0), at(x + 2, 5)), (at(x, 2), at(x + 6, 3))]
    return _finish("foster", s, _cycle_edges(90) + chords)


# LCF notation for the Biggs-Smith graph; accepted only through verify_row.
BIGGS_SMITH_LCF = (
    16, 24, -38, 17, 34, 48, -19, 41, -35, 47, -20, 34, -36, 21, 14, 48, -16,
    -36, -43, 28, -17, 21, 29, -43, 46, -24, 28, -38, -14, -50, -45, 21, 8, 27,
    -21, 20, -37, 39, -34, -44, -8, 38, -21, 25, 15, -34, 18, -28, -41, 36, 8,
    -29, -21, -48, -28, -20, -47, 14, -8, -15, -27, 38, 24, -48, -18, 25, 38,
    31, -25, 24, -46, -14, 28, 11, 21, 35, -39, 43, 36, -38, 14, 50, 43, 36,
    -11, -36, -24, 45, 8, 19, -25, 38, 20, -24, -14, -21, -8, 44, -31, -38, -28, 37,
)


def _biggs_smith():
    n = 102
    s = LabeledVertexScheme("integers", n)
    chords = [(i, (i + jump) % n) for i, jump in enumerate(BIGGS_SMITH_LCF)]
    return _finish("biggs-smith", s, _cycle_edges(n) + chords)


# Table order.
BUILDERS = {
    "k4": _k4,
    "k33": _k33,
    "q3": _q3,
    "petersen": _petersen,
    "heawood": _heawood,
    "pappus": _pappus,
    "dodecahedral": _dodecahedral,
    "desargues": _desargues,
    "coxeter": _coxeter,
    "tutte": _tutte,
    "foster": _foster,
    "biggs-smith": _biggs_smith,
}

NAMES = tuple(BUILDERS)

_ALIASES = {
    "tetrahedral": "k4",
    "k3,3": "k33",
    "k3_3": "k33",
    "thomsen": "k33",
    "cube": "q3",
    "3-cube": "q3",
    "pet": "petersen",
    "hea": "heawood",
    "pap": "pappus",
    "dod": "dodecahedral",
    "dodecahedron": "dodecahedral",
    "des": "desargues",
    "cox": "coxeter",
    "tut": "tutte",
    "tutte8cage": "tutte",
    "tutte-8-cage": "tutte",
    "fos": "foster",
    "biggs_smith": "biggs-smith",
    "biggssmith": "biggs-smith",
}


def canonical_name(name: str) -> str:
    key = name.strip().lower().replace(" ", "")
    key = _ALIASES.get(key, key)
    if key not in BUILDERS:
        raise UnknownGraph(f"unknown catalog graph {name!r}; expected one of {', '.join(NAMES)}")
    return key


def build_labeled(name: str) -> CatalogGraph:
    return BUILDERS[canonical_name(name)]()


def build(name: str) -> Graph:
    return build_labeled(name).graph
