"""Command-line front end: JSON on stdout, a human-readable log on stderr.

Exit codes: 0 success (all checks pass, assignment found), 1 a check failed
or no assignment exists, 2 bad usage.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .catalog import NAMES, TABLE, UnknownGraph, build, canonical_name
from .catalog.fixtures import OAC_FIXTURES, fixture_oac
from .cycles import cycles_of_length, girth_cycles
from .embedding import FaceSet
from .graph import Graph, GraphError, girth, graph_from_json
from .oac import ObstructionCertificate, OrientedCycleSet, build_constraint_graph, count_oacs, solve_oa
from .symmetry import arc_transitivity, automorphism_group
from .zipper import ZipError, zip_cycles

log = logging.getLogger("cdtgraphs")


class UsageError(Exception):
    pass


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def _emit_with_dot(json_text: str, dot_text: str, out: str | None, dot: bool) -> None:
    """JSON to ``out`` (plus a sibling .dot file with ``dot``), or to stdout;
    with ``dot`` and no ``out`` only the DOT text is printed."""
    if out:
        _emit(json_text, out)
        if dot:
            _emit(dot_text, str(Path(out).with_suffix(".dot")))
    else:
        _emit(dot_text if dot else json_text, None)


def load_graph(spec: str) -> tuple[Graph, str | None]:
    """A catalog name or the path of a graph JSON file."""
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        try:
            return graph_from_json(path.read_text(encoding="utf-8")), None
        except OSError as exc:
            raise UsageError(f"cannot read {spec}: {exc}") from exc
    try:
        key = canonical_name(spec)
    except UnknownGraph as exc:
        raise UsageError(f"unknown graph {spec!r}; choose from {', '.join(NAMES)} or give a .json file") from exc
    return build(key), key


def _resolve_k(G: Graph, key: str | None, k: int | None) -> int:
    if k is not None:
        return k
    if key is not None:
        return TABLE[key].k
    return arc_transitivity(G, automorphism_group(G))


# -- verbs ---------------------------------------------------------------------


def cmd_catalog(args) -> int:
    if args.action == "list":
        _emit(_dump([TABLE[n].as_dict() for n in NAMES]), args.out)
        return 0
    if not args.name:
        raise UsageError("catalog build needs a graph name")
    G, _ = load_graph(args.name)
    _emit_with_dot(_dump(G.to_dict()), G.to_dot(canonical_name(args.name).replace("-", "_")), args.out, args.dot)
    return 0


def cmd_cycles(args) -> int:
    G, _ = load_graph(args.graph)
    if args.length is not None:
        cycles = cycles_of_length(G, args.length)
    else:
        cycles = girth_cycles(G)
    data = {"girth": girth(G), "count": len(cycles), "cycles": [[G.label(v) for v in c] for c in cycles]}
    _emit(_dump(data), args.out)
    return 0


def cmd_oac(args) -> int:
    G, key = load_graph(args.graph)
    k = _resolve_k(G, key, args.k)
    cg = build_constraint_graph(G, girth_cycles(G), k)
    sol = solve_oa(cg)
    if isinstance(sol, ObstructionCertificate):
        data = {"k": k, "balanced": False, **sol.to_dict(G)}
        log.info("no orientation assignment: odd chain through %d cycles", len(sol))
        _emit(_dump(data), args.out)
        return 1
    data = {"k": k, "balanced": True, "count": count_oacs(cg), **sol.to_dict(G)}
    _emit(_dump(data), args.out)
    return 0


def _zip_for(name_or_path: str, oac_path: str | None, k: int | None, lenient: bool, identify: str):
    from .verify import zip_input

    G, key = load_graph(name_or_path)
    if oac_path is None:
        if key is None:
            raise UsageError("a graph file needs --oac")
        G, oac, k_default, strict = zip_input(key)
        return G, zip_cycles(G, oac.cycles, k or k_default, strict=strict and not lenient, identify=identify)
    oac = OrientedCycleSet.from_dict(json.loads(Path(oac_path).read_text(encoding="utf-8")), G)
    k = _resolve_k(G, key, k)
    return G, zip_cycles(G, oac.cycles, k, strict=not lenient, identify=identify)


def cmd_zip(args) -> int:
    _, Y = _zip_for(args.graph, args.oac, args.k, args.lenient, args.identify)
    log.info("zipped: %d vertices, %d edges, %d components", Y.n, Y.edge_count, len(Y.components()))
    _emit_with_dot(Y.to_json() + "\n", Y.to_dot(), args.out, args.dot)
    return 0


def cmd_analyze(args) -> int:
    from . import analysis
    from .verify import zip_graph, zip_input

    if args.target == "lkn":
        if args.n is None:
            raise UsageError("analyze lkn needs --n")
        try:
            rep = analysis.check_lkn_fastened(args.n)
        except analysis.AnalysisError as exc:
            raise UsageError(str(exc)) from exc
        ok = rep["passed"]
    elif args.target == "pappus":
        rep = analysis.pappus_report(zip_graph("pappus"))
        ok = rep["components"] == 2 and all(p["fastened"]["passed"] for p in rep["parts"])
    elif args.target == "desargues":
        rep = analysis.desargues_report(zip_graph("desargues"))
        ok = rep["components"] == 2 and all(
            p["isomorphic_to_line_graph_of_K5"] and p["complement_is_petersen"] and p["fastened"]["passed"]
            for p in rep["parts"])
    else:
        G, oac, k, _ = zip_input("coxeter")
        rep = analysis.klein_report(zip_cycles(G, oac.cycles, k), oac.names)
        col = analysis.find_fano_coloring(G)
        rep["fano_coloring"] = {
            "found": col is not None,
            "valid": col is not None and analysis.check_fano_coloring(G, *col),
            "vertex_colors": None if col is None else col[0],
        }
        emb = rep["embedding"]
        ok = (rep["vertices"], rep["edges"], rep["faces"]) == (56, 84, 24) and emb["genus"] == 3 \
            and rep["petrie_lengths"] == [8] and rep["dual"]["chromatic_number"] == 8
    _emit(_dump({"target": args.target, "passed": ok, "report": rep}), args.out)
    return 0 if ok else 1


def cmd_verify_all(args) -> int:
    from .verify import verify_all

    if args.only and args.only != "lkn":
        load_graph(args.only)  # validates the name
    argv = ["verify-all"] + (["--only", args.only] if args.only else []) + (["--slow"] if args.slow else [])
    report = verify_all(args.only, args.slow, command=argv)
    for c in report.checks:
        status = "skip" if c.passed is None else "ok" if c.passed else "FAIL"
        log.info("%-4s %s expected=%s measured=%s", status, c.id, json.dumps(c.expected), json.dumps(c.measured))
    log.info("%d checks, %d failed", len(report.checks), len(report.failures))
    _emit(report.to_json() + "\n", args.out)
    return 0 if report.passed else 1


def cmd_export(args) -> int:
    from .analysis import dual_cycle_graph
    from .verify import NotZippable, zip_graph

    G, key = load_graph(args.name)
    if key is None:
        raise UsageError("export takes a catalog name")
    if args.what == "graph":
        _emit_with_dot(_dump(G.to_dict()), G.to_dot(key.replace("-", "_")), args.out, args.dot)
        return 0
    if args.what == "oac":
        if key in OAC_FIXTURES:
            oac = fixture_oac(key)
        else:
            sol = solve_oa(build_constraint_graph(G, girth_cycles(G), TABLE[key].k))
            if isinstance(sol, ObstructionCertificate):
                _emit(_dump({"error": f"{key} admits no orientation assignment", **sol.to_dict(G)}), args.out)
                return 1
            oac = sol
        _emit(_dump({"graph": key, "k": TABLE[key].k, **oac.to_dict(G)}), args.out)
        return 0
    try:
        Y = zip_graph(key)
    except NotZippable as exc:
        _emit(_dump({"error": str(exc), **exc.certificate}), args.out)
        return 1
    if args.what == "zip":
        _emit_with_dot(Y.to_json() + "\n", Y.to_dot(), args.out, args.dot)
        return 0
    D = dual_cycle_graph(Y, FaceSet.from_zip(Y))
    _emit_with_dot(_dump(D.to_dict()), D.to_dot("dual"), args.out, args.dot)
    return 0


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # logging flags work before or after the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS,
                        help="debug logging on stderr")
    common.add_argument("-q", "--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="only warnings on stderr")
    p = argparse.ArgumentParser(prog="cdtgraphs", description="Cubic distance-transitive graph toolkit.",
                                parents=[common])
    p.add_argument("--version", action="version", version=f"cdtgraphs {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help, parents=[common])

    def out_flags(sp, dot=False):
        sp.add_argument("--out", help="write to this file instead of stdout")
        if dot:
            sp.add_argument("--dot", action="store_true", help="also (or instead) produce Graphviz DOT")

    sp = verb("catalog", "list the table or build a graph")
    sp.add_argument("action", choices=("list", "build"))
    sp.add_argument("name", nargs="?")
    out_flags(sp, dot=True)
    sp.set_defaults(func=cmd_catalog)

    sp = verb("cycles", "enumerate cycles")
    sp.add_argument("action", choices=("enum",))
    sp.add_argument("graph", help="catalog name or graph JSON file")
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--girth-only", action="store_true", help="girth cycles (the default)")
    grp.add_argument("--length", type=int, help="cycles with this many vertices")
    out_flags(sp)
    sp.set_defaults(func=cmd_cycles)

    sp = verb("oac", "solve for an orientation assignment")
    sp.add_argument("action", choices=("solve",))
    sp.add_argument("graph", help="catalog name or graph JSON file")
    sp.add_argument("--k", type=int, help="path order (defaults to the arc-transitivity)")
    out_flags(sp)
    sp.set_defaults(func=cmd_oac)

    sp = verb("zip", "zip the cycle powers of an orientation assignment")
    sp.add_argument("graph", help="catalog name or graph JSON file")
    sp.add_argument("--oac", help="orientation assignment JSON (catalog names default to the shipped one)")
    sp.add_argument("--k", type=int)
    sp.add_argument("--lenient", action="store_true", help="also zip co-oriented pairs")
    sp.add_argument("--identify", choices=("auto", "closure", "host"), default="auto")
    out_flags(sp, dot=True)
    sp.set_defaults(func=cmd_zip)

    sp = verb("analyze", "reports on the zipped graphs and L(K_n)")
    sp.add_argument("target", choices=("pappus", "desargues", "coxeter", "lkn"))
    sp.add_argument("--n", type=int, help="n for lkn (4..8)")
    out_flags(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = verb("verify-all", "recompute every claim")
    sp.add_argument("--only", help="one catalog graph, or lkn")
    sp.add_argument("--slow", action="store_true", help="include hamiltonicity of the largest graphs")
    out_flags(sp)
    sp.set_defaults(func=cmd_verify_all)

    sp = verb("export", "write one pipeline stage for a catalog graph")
    sp.add_argument("name")
    sp.add_argument("what", choices=("graph", "oac", "zip", "dual"))
    out_flags(sp, dot=True)
    sp.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    verbose, quiet = getattr(args, "verbose", False), getattr(args, "quiet", False)
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(message)s", stream=sys.stderr,
                        force=True)
    try:
        return args.func(args)
    except UsageError as exc:
        log.error("%s", exc)
        return 2
    except (GraphError, ZipError, json.JSONDecodeError, KeyError) as exc:
        log.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
