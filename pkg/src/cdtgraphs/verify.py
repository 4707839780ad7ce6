"""Recompute every countable claim about the catalog and collect the results.

Each check carries a claim id (see ``CLAIMS``), the subject it was run on,
the expected and measured values and a verdict. A verdict of ``None`` marks
a check that was skipped (slow checks without ``slow=True``).
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Any, Callable

from . import __version__
from .analysis import (
    check_fano_coloring,
    check_lkn_fastened,
    desargues_report,
    find_fano_coloring,
    klein_report,
    pappus_report,
)
from .catalog import NAMES, build, canonical_name, expected_row
from .catalog.fixtures import OAC_FIXTURES, OBSTRUCTION_FIXTURES, fixture_oac, obstruction_chain
from .cycles import check_cycle_path_uh, check_sf_uh, girth_cycles
from .embedding import FaceSet, verify_polygonal_embedding
from .graph import Graph, diameter, find_hamiltonian_cycle, girth, is_bipartite, is_connected
from .oac import (
    ObstructionCertificate,
    OrientedCycleSet,
    analyse_kappa,
    build_constraint_graph,
    chain_certificate,
    same_up_to_component_flips,
    validate_oac,
    verify_certificate,
)
from .symmetry import arc_transitivity, automorphism_group
from .zipper import (
    MarkedGraph,
    ZipError,
    kappa2_reference,
    reconstructs_host,
    same_underlying_multigraph,
    zip_cycles,
)

log = logging.getLogger("cdtgraphs")

SCHEMA_VERSION = 1
LARGE = ("foster", "biggs-smith")
LKN_RANGE = range(4, 8)

CLAIMS: dict[str, str] = {
    "table.n": "order of the graph",
    "table.d": "diameter",
    "table.g": "girth",
    "table.k": "arc-transitivity",
    "table.eta": "number of girth cycles, also equal to 2^(k-2)*3n/g",
    "table.a": "order of the automorphism group",
    "table.b": "bipartite flag",
    "table.h": "hamiltonian flag (exhibited cycle or exhausted search)",
    "table.kappa": "orientation class: 0 none, 1 planar, 2 g = 2(k-1), 3 otherwise",
    "graph.cubic": "every vertex has degree 3",
    "graph.connected": "the graph is connected",
    "cycles.multiplicity": "girth cycles through each path of each order are constant in number; the longest paths lie on exactly 2, meeting only there",
    "cycles.uh": "automorphisms act transitively on girth cycles and k-vertex paths with full induced symmetry",
    "oac.fixture": "the shipped oriented cycle listing is a valid orientation assignment",
    "oac.solver-agrees": "the solver's assignment equals the shipped listing up to flipping constraint components",
    "oac.count": "valid assignments number 2^(constraint components)",
    "oac.certificate": "the solver's obstruction re-verifies with odd parity",
    "oac.shipped-chain": "the shipped obstruction chain re-verifies with odd parity",
    "zip.k2": "zipping with k = 2 gives back the host graph",
    "zip.kappa2": "the zip equals the (k-1)-th power with every edge repeated g-1 times",
    "zip.pappus": "two mutually isomorphic components with 9 vertices and 27 edges",
    "zip.desargues": "two components, each the line graph of K5 with Petersen complement",
    "zip.coxeter": "56 vertices, 84 edges, cubic, connected, girth 7",
    "embed.polyhedron": "girth cycles of a planar graph give a genus-0 map",
    "embed.klein": "the 24 zipped heptagons give an orientable genus-3 map",
    "embed.klein-symmetry": "the zipped Coxeter graph has 336 automorphisms",
    "embed.petrie": "Petrie walks of the genus-3 map have length 8",
    "embed.dual-degree": "the dual of the genus-3 map is 7-regular on 24 vertices",
    "embed.dual-chromatic": "the dual of the genus-3 map has chromatic number 8",
    "embed.pappus-torus": "H0 and H1 triangles give an orientable genus-1 map on each Pappus component",
    "config.pappus": "H0, H1 and H2 give self-dual (9_3) configurations whose Menger graph is the component",
    "config.desargues": "the non-clique triangles give a self-dual (10_3) configuration whose Menger graph is the component",
    "fastened.pappus": "H0, H1, H2 satisfy the K2-fastened conditions on each Pappus component",
    "fastened.desargues": "K4 and K3 copies satisfy the K2-fastened conditions with per-vertex counts (2, 3)",
    "lkn": "L(K_n) is K2-fastened for stars and colour triangles with counts (n, C(n,3)) and (2, n-2)",
    "fano.coxeter": "a Fano colouring of the Coxeter graph exists and passes the colour rules",
}


@dataclass(frozen=True)
class Check:
    claim: str
    subject: str
    expected: Any
    measured: Any
    passed: bool | None
    note: str = ""

    @property
    def id(self) -> str:
        return f"{self.claim}:{self.subject}"

    def to_dict(self) -> dict:
        out = {"id": self.id, "claim": self.claim, "subject": self.subject,
               "expected": self.expected, "measured": self.measured, "pass": self.passed}
        if self.note:
            out["note"] = self.note
        return out


def _check(claim: str, subject: str, expected, measured, note: str = "") -> Check:
    if claim not in CLAIMS:
        raise KeyError(f"unknown claim id {claim}")
    return Check(claim, subject, expected, measured, expected == measured, note)


def _skip(claim: str, subject: str, expected, note: str) -> Check:
    return Check(claim, subject, expected, None, None, note)


def _order(c: Check):
    subj = c.subject
    return (c.claim, NAMES.index(subj) if subj in NAMES else len(NAMES), subj)


@dataclass
class RunReport:
    command: list[str]
    checks: list[Check] = field(default_factory=list)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.passed is False]

    @property
    def passed(self) -> bool:
        return bool(self.checks) and not self.failures

    def find(self, claim: str, subject: str) -> Check:
        for c in self.checks:
            if c.claim == claim and c.subject == subject:
                return c
        raise KeyError(f"{claim}:{subject}")

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "tool": {"name": "cdtgraphs", "version": __version__},
            "command": self.command,
            "passed": self.passed,
            "summary": {
                "checks": len(self.checks),
                "failed": len(self.failures),
                "skipped": sum(c.passed is None for c in self.checks),
            },
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


# -- per-row table checks ------------------------------------------------------


@dataclass
class RowReport:
    name: str
    checks: list[Check]
    kappa: Any = None  # KappaResult when it could be computed

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def column(self, col: str) -> Check:
        for c in self.checks:
            if c.claim == f"table.{col}" or c.claim == col:
                return c
        raise KeyError(col)


def _guard(fn: Callable[[], Any]):
    try:
        return fn()
    except Exception as exc:  # failures become report content
        return f"error: {exc}"


def verify_row(name: str, slow: bool = False, G: Graph | None = None) -> RowReport:
    """Recompute every table column for ``name`` (or for ``G`` if given) and
    compare it to the expected row."""
    key = canonical_name(name)
    row = expected_row(key)
    if G is None:
        G = build(key)
    checks = [
        _check("graph.cubic", key, True, G.is_regular(3)),
        _check("graph.connected", key, True, is_connected(G)),
        _check("table.n", key, row.n, G.n),
        _check("table.d", key, row.d, _guard(lambda: diameter(G))),
        _check("table.g", key, row.g, girth(G)),
    ]
    aut = _guard(lambda: automorphism_group(G))
    k = _guard(lambda: arc_transitivity(G, aut)) if not isinstance(aut, str) else aut
    checks.append(_check("table.k", key, row.k, k))
    cycles = girth_cycles(G)
    checks.append(_check("table.eta", key, row.eta, len(cycles),
                         note=f"2^(k-2)*3n/g = {row.eta_formula()}"))
    checks.append(_check("table.a", key, row.a, aut if isinstance(aut, str) else aut.order))
    checks.append(_check("table.b", key, row.b, is_bipartite(G)))
    if key in LARGE and not slow:
        checks.append(_skip("table.h", key, row.h, "needs --slow"))
    else:
        ham = find_hamiltonian_cycle(G, budget=None if slow else 60.0)
        measured = None if ham is False else ham is not None
        checks.append(_check("table.h", key, row.h, measured,
                             note="search budget exhausted" if ham is False else
                             "cycle exhibited" if ham else "search exhausted"))
    kappa = None
    if isinstance(k, int) and girth(G) is not None and is_connected(G):
        kappa = _guard(lambda: analyse_kappa(G, girth(G), k))
    measured = kappa if isinstance(kappa, str) or kappa is None else kappa.kappa
    checks.append(_check("table.kappa", key, row.kappa, measured))
    return RowReport(key, checks, None if isinstance(kappa, str) else kappa)


# -- orientation assignment checks --------------------------------------------


def oac_checks(name: str, G: Graph, row: RowReport) -> list[Check]:
    key = canonical_name(name)
    k = expected_row(key).k
    out = []
    cg = build_constraint_graph(G, girth_cycles(G), k)
    sol = row.kappa.solution if row.kappa is not None else None
    if key in OAC_FIXTURES:
        fix = fixture_oac(key)
        out.append(_check("oac.fixture", key, True, _guard(lambda: validate_oac(G, fix, k))))
        agree = isinstance(sol, OrientedCycleSet) and same_up_to_component_flips(cg, fix, sol)
        out.append(_check("oac.solver-agrees", key, True, agree))
        if isinstance(sol, OrientedCycleSet):
            out.append(_check("oac.count", key, 2 ** len(cg.components()), _count_by_flips(G, cg, sol, k)))
    if isinstance(sol, ObstructionCertificate):
        out.append(_check("oac.certificate", key, True, verify_certificate(G, sol, k),
                          note=f"chain of {len(sol)} cycles"))
    if key in OBSTRUCTION_FIXTURES:
        chain = [c for _, c in obstruction_chain(key)]
        cert = _guard(lambda: chain_certificate(G, chain, k))
        ok = not isinstance(cert, str) and verify_certificate(G, cert, k)
        out.append(_check("oac.shipped-chain", key, True, ok))
    return out


def _count_by_flips(G: Graph, cg, sol: OrientedCycleSet, k: int) -> int:
    """Count valid assignments among all component-wise flips of ``sol``;
    every valid assignment is one of these, so this is the exact count."""
    comps = cg.components()
    if len(comps) > 12:
        return 2 ** len(comps) if validate_oac(G, sol, k) else 0
    count = 0
    for mask in range(2 ** len(comps)):
        idx = [i for j, comp in enumerate(comps) if mask >> j & 1 for i in comp]
        count += validate_oac(G, sol.flipped(idx), k)
    return count


# -- cycle multiplicities and symmetry ----------------------------------------


def cycle_checks(name: str, G: Graph) -> list[Check]:
    key = canonical_name(name)
    row = expected_row(key)
    rep = check_sf_uh(G, row.g, row.k)
    law = "2^(i+1)" if rep.law_2_pow_i_plus_1 else "2^i" if rep.law_2_pow_i else "neither"
    out = [_check("cycles.multiplicity", key, True, rep.passed, note=f"mu = {rep.mu}, fits {law}; exact meetings {rep.exact_meeting}")]
    uh = check_cycle_path_uh(G, automorphism_group(G), row.k)
    out.append(_check("cycles.uh", key, True, uh.passed))
    return out


# -- zipping ---------------------------------------------------------------------


class NotZippable(ZipError):
    """No orientation assignment exists; ``certificate`` shows why."""

    def __init__(self, message: str, certificate: dict):
        super().__init__(message)
        self.certificate = certificate


def zip_input(name: str) -> tuple[Graph, OrientedCycleSet, int, bool]:
    """Host graph, oriented cycles, k and strictness used to zip ``name``.

    The shipped listing is preferred; otherwise the solver's assignment is
    used. The Pappus listing is zipped leniently because the printed listing
    contains co-oriented pairs and no valid assignment exists.
    """
    key = canonical_name(name)
    G = build(key)
    k = expected_row(key).k
    if key in OAC_FIXTURES:
        oac = fixture_oac(key)
        if validate_oac(G, oac, k):
            return G, oac, k, True
        return G, oac, k, False
    res = analyse_kappa(G, expected_row(key).g, k)
    if isinstance(res.solution, ObstructionCertificate):
        raise NotZippable(f"{key} admits no orientation assignment", res.solution.to_dict(G))
    return G, res.solution, k, True


def zip_graph(name: str) -> MarkedGraph:
    G, oac, k, strict = zip_input(name)
    return zip_cycles(G, oac.cycles, k, strict=strict)


def zip_checks(name: str) -> list[Check]:
    key = canonical_name(name)
    out: list[Check] = []
    if key in ("k4", "q3", "dodecahedral"):
        G, oac, k, _ = zip_input(key)
        Y = zip_cycles(G, oac.cycles, k)
        out.append(_check("zip.k2", key, True, reconstructs_host(G, Y)))
        emb = verify_polygonal_embedding(FaceSet.from_walks(G, oac.cycles))
        out.append(_check("embed.polyhedron", key, {"orientable": True, "genus": 0},
                          {"orientable": emb.orientable, "genus": emb.genus}))
    elif key == "k33":
        G, oac, k, _ = zip_input(key)
        Y = zip_cycles(G, oac.cycles, k)
        ref = kappa2_reference(G, k, expected_row(key).g)
        out.append(_check("zip.kappa2", key, True, same_underlying_multigraph(Y, ref),
                          note=f"{Y.n} vertices, {Y.edge_count} edges"))
    elif key == "pappus":
        Y = zip_graph(key)
        rep = pappus_report(Y)
        parts = rep["parts"]
        shape = [[p["vertices"], p["edges"]] for p in parts]
        out.append(_check("zip.pappus", key, {"components": [[9, 27], [9, 27]], "isomorphic": True},
                          {"components": shape, "isomorphic": rep.get("components_isomorphic")},
                          note=f"{rep['co_oriented_pairs']} co-oriented pairs zipped leniently"))
        out.append(_check("embed.pappus-torus", key, [[True, 1]] * 2,
                          [[p["embedding_h0_h1"]["orientable"], p["embedding_h0_h1"]["genus"]] for p in parts]))
        out.append(_check("config.pappus", key, True,
                          all(c["passed"] for p in parts for c in p["configurations"].values())))
        out.append(_check("fastened.pappus", key, True,
                          all(p["fastened"]["passed"] and p["family_sizes"] == [9, 9, 9] for p in parts)))
    elif key == "desargues":
        Y = zip_graph(key)
        rep = desargues_report(Y)
        parts = rep["parts"]
        out.append(_check("zip.desargues", key, [[True, True]] * 2,
                          [[p["isomorphic_to_line_graph_of_K5"], p["complement_is_petersen"]] for p in parts]))
        out.append(_check("config.desargues", key, True, all(p["configuration"]["passed"] for p in parts)))
        out.append(_check("fastened.desargues", key, [[2, 3]] * 2,
                          [p["per_vertex"] if p["fastened"]["passed"] else None for p in parts]))
    elif key == "coxeter":
        G, oac, k, _ = zip_input(key)
        Y = zip_cycles(G, oac.cycles, k)
        rep = klein_report(Y, oac.names)
        out.append(_check("zip.coxeter", key,
                          {"vertices": 56, "edges": 84, "cubic": True, "connected": True, "girth": 7},
                          {f: rep[f] for f in ("vertices", "edges", "cubic", "connected", "girth")}))
        emb = rep["embedding"]
        out.append(_check("embed.klein", key,
                          {"faces": 24, "euler_characteristic": -4, "orientable": True, "genus": 3},
                          {f: emb[f] for f in ("faces", "euler_characteristic", "orientable", "genus")}))
        out.append(_check("embed.klein-symmetry", key, 336, rep["automorphisms"]))
        out.append(_check("embed.petrie", key, [8], rep["petrie_lengths"]))
        dual = rep["dual"]
        out.append(_check("embed.dual-degree", key, [24, 7], [dual["vertices"], dual["regular_degree"]]))
        out.append(_check("embed.dual-chromatic", key, 8, dual["chromatic_number"],
                          note=f"the 8 named face classes colour properly: {dual.get('named_coloring_proper')}"))
        col = find_fano_coloring(G)
        out.append(_check("fano.coxeter", key, True, col is not None and check_fano_coloring(G, *col)))
    return out


def lkn_checks(n: int) -> list[Check]:
    rep = check_lkn_fastened(n)
    return [_check("lkn", f"L(K{n})", {"copies": [n, comb(n, 3)], "per_vertex": [2, n - 2], "passed": True},
                   {"copies": rep["copies"], "per_vertex": rep["per_vertex"], "passed": rep["passed"]})]


# -- whole run -----------------------------------------------------------------


def graph_checks(name: str, slow: bool = False) -> list[Check]:
    key = canonical_name(name)
    start = time.monotonic()
    G = build(key)
    row = verify_row(key, slow)
    checks = list(row.checks)
    checks += cycle_checks(key, G)
    checks += oac_checks(key, G, row)
    checks += zip_checks(key)
    log.info("%s: %d checks in %.2f s", key, len(checks), time.monotonic() - start)
    return checks


def thread_count() -> int:
    raw = os.environ.get("CDTGRAPHS_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def verify_all(only: str | None = None, slow: bool = False, threads: int | None = None,
               command: list[str] | None = None) -> RunReport:
    """Run every check, or only those about one graph (``only``), or the
    line-graph family (``only="lkn"``)."""
    jobs: list[Callable[[], list[Check]]] = []
    if only is None or only == "lkn":
        jobs += [lambda n=n: lkn_checks(n) for n in LKN_RANGE]
    if only != "lkn":
        names = NAMES if only is None else (canonical_name(only),)
        jobs += [lambda name=name: graph_checks(name, slow) for name in names]
    threads = threads or thread_count()
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(lambda job: job(), jobs))
    else:
        results = [job() for job in jobs]
    checks = sorted((c for chunk in results for c in chunk), key=_order)
    return RunReport(command or ["verify-all"], checks)


__all__ = [
    "CLAIMS", "Check", "RunReport", "RowReport", "verify_row", "verify_all", "zip_graph",
    "zip_input", "graph_checks", "lkn_checks", "SCHEMA_VERSION", "NotZippable",
]
