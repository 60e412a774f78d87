"""``circtw`` command line.

Exit status: 0 on success, 1 when a checked property is violated, 2 on usage
or input errors. Results are printed as JSON; infinite distances are ``null``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import bound as bound_mod
from .circular import PQParams, circular_chromatic_number, is_pq_colorable
from .corpus import path_probe_corpus, structured_corpus
from .errors import CirctwError, LemmaViolation, ParseError
from .experiment import ExperimentConfig, emit_report, report_to_json, run_verify_theorem
from .formats import emit_graph, read_graph, parse_graph_file
from .gadgets import synthesize_gadgets, spot_check
from .graph import INF, Bipartition, Graph, bipartition, odd_girth
from .precolor import ProbeInstance, f_set, probe_extension_distance
from .reduction import ReductionParams, reduce_type, verify_f_inclusion
from .treewidth import RootedPartialKTree
from .typelattice import glue_type_suite, is_bipartite_type, type_of

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(CirctwError):
    pass


def _inf(x):
    return None if x == INF else x


def _out(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load(path: str):
    if path == "-":
        return parse_graph_file(sys.stdin.read())
    return read_graph(path)


def _graph(path: str) -> Graph:
    obj = _load(path)
    return obj.graph if isinstance(obj, RootedPartialKTree) else obj


def _rooted(path: str) -> RootedPartialKTree:
    obj = _load(path)
    if not isinstance(obj, RootedPartialKTree):
        raise UsageError(f"{path}: this command needs a rooted graph (an 'r' line)")
    return obj


def _precoloring(text: Optional[str], n: int) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        try:
            v, c = (int(x) for x in item.split(":"))
        except ValueError:
            raise UsageError(f"bad precoloring entry {item!r}; expected vertex:color") from None
        if not 1 <= v <= n:
            raise UsageError(f"precolored vertex {v} outside 1..{n}")
        out[v - 1] = c
    return out


# -- subcommands -------------------------------------------------------------

def cmd_oddgirth(args) -> int:
    g = _graph(args.graph)
    side = bipartition(g)
    res = {"odd_girth": _inf(odd_girth(g)), "bipartite": isinstance(side, Bipartition)}
    if not res["bipartite"]:
        res["odd_cycle_witness"] = [v + 1 for v in side.vertices]
    _out(res)
    return EXIT_OK


def cmd_chi_c(args) -> int:
    g = _graph(args.graph)
    x = circular_chromatic_number(g)
    _out({"chi_c": str(x), "numerator": x.numerator, "denominator": x.denominator})
    return EXIT_OK


def cmd_pq_color(args) -> int:
    obj = _load(args.graph)
    pq = PQParams(args.p, args.q)
    g = obj.graph if isinstance(obj, RootedPartialKTree) else obj
    col = is_pq_colorable(obj, pq, _precoloring(args.precolor, g.n))
    res = {"colorable": col is not None,
           "coloring": None if col is None else [col[v] for v in range(g.n)]}
    if col is not None and not col.is_valid(g, pq):
        res["error"] = "solver returned an invalid coloring"
        _out(res)
        return EXIT_VIOLATION
    _out(res)
    return EXIT_OK


def cmd_fset(args) -> int:
    t = _rooted(args.graph)
    fs = f_set(t, PQParams(args.p, args.q), method=args.method)
    res = {"k": t.k, "p": args.p, "size": len(fs), "of": fs.size, "hex": fs.to_hex()}
    if args.members:
        res["members"] = [list(c) for c in fs]
    _out(res)
    return EXIT_OK


def cmd_type(args) -> int:
    t = _rooted(args.graph)
    m = type_of(t)
    _out({"k": t.k, "type": m.to_json(), "bipartite_type": is_bipartite_type(m),
          "certified": t.certified})
    return EXIT_OK


def cmd_reduce(args) -> int:
    t = _rooted(args.graph)
    params = ReductionParams(args.p, args.q, args.d, args.probed_d)
    out, trace = reduce_type(t, params, order=args.order)
    res = {"structural_only": params.structural_only, "type": type_of(out).to_json(),
           "vertices": out.n, "graph": emit_graph(out)}
    if args.trace:
        res["trace"] = {
            "i0": trace.i0,
            "threshold": trace.threshold,
            "intervals_checked": [{"i": i, "low": lo, "high": hi, "entries": list(hits)}
                                  for i, lo, hi, hits in trace.intervals_checked],
            "classes": [list(c) for c in trace.classes],
            "contraction_log": [[v + 1 for v in log] for log in trace.contraction_log],
            "predicted_type": trace.predicted_type.to_json(),
        }
    status = EXIT_OK
    if args.verify_inclusion:
        rep = verify_f_inclusion(t, out, params.pq, args.d, params.structural_only)
        res["inclusion"] = {"holds": rep.holds, "reduced_size": rep.reduced_size,
                            "original_size": rep.original_size,
                            "witness": None if rep.witness is None else list(rep.witness)}
        if not rep.holds and not params.structural_only:
            status = EXIT_VIOLATION
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(res["graph"])
    _out(res)
    return status


def cmd_gadgets(args) -> int:
    pq = PQParams(args.p, args.q)
    table = synthesize_gadgets(args.k, pq, args.d, args.type_bound, args.budget, args.vertex_cap, args.universe)
    if args.out:
        table.save(args.out)
    res = {
        "types": len(table.entries),
        "graphs_searched": table.graphs_searched,
        "max_order": table.max_order,
        "order_values": list(table.order_values),
        "entries": [{"type": g.type.to_json(), "order": g.order, "fset_size": len(g.fset),
                     "status": g.status, "realized": g.realized, "pieces": g.pieces} for g in table.entries],
    }
    status = EXIT_OK
    if args.spot_check:
        sc = spot_check(table, samples=args.spot_check, seed=args.seed)
        res["spot_check"] = {"checked": sc.checked, "violations": len(sc.violations)}
        if not sc.ok:
            status = EXIT_VIOLATION
    _out(res)
    return status


def cmd_bound(args) -> int:
    b = bound_mod.girth_bound(args.k, args.p, args.d)
    nb = bound_mod.order_bound(args.k, args.p, args.d)
    res = {"coefficient": b.coefficient, "exponent": b.exponent, "digits": b.digits,
           "materialized": b.materialized, "order_bound": {"coefficient": nb.coefficient, "digits": nb.digits}}
    if args.value and b.materialized:
        if hasattr(sys, "set_int_max_str_digits"):
            sys.set_int_max_str_digits(0)
        res["value"] = str(b.value)
    _out(res)
    return EXIT_OK


def cmd_probe_d(args) -> int:
    pq = PQParams(args.p, args.q)
    if args.graph:
        corpus = []
        for path in args.graph:
            t = _rooted(path)
            corpus.append(ProbeInstance(t.graph, t.roots, path))
    elif args.corpus == "paths":
        corpus = path_probe_corpus(args.max_length)
    else:
        corpus = [item.probe() for item in structured_corpus(args.max_vertices)]
    r = probe_extension_distance(pq, corpus)
    res = {"d": r.d, "instances": len(corpus), "failing_separations": list(r.failing_separations)}
    if r.witness is not None:
        res["witness"] = {"name": r.witness.name, "graph": emit_graph(r.witness.graph),
                          "precoloring": {str(v + 1): c for v, c in r.witness_coloring.items()}}
    _out(res)
    return EXIT_OK


def cmd_verify_glue(args) -> int:
    ks = tuple(int(x) for x in args.k.split(","))
    r = glue_type_suite(args.count, args.seed, ks, args.max_vertices)
    _out({"instances": r.instances, "violations": len(r.violations),
          "messages": [str(v) for v in r.violations[:10]]})
    return EXIT_OK if r.ok else EXIT_VIOLATION


def cmd_verify_theorem(args) -> int:
    if (args.exhaustive_cap is None) == (args.samples is None):
        raise UsageError("give exactly one of --exhaustive-cap and --samples")
    cfg = ExperimentConfig(args.k, args.p, args.q, args.girth_floor, args.exhaustive_cap, args.samples,
                           args.seed, args.max_vertices, args.keep)
    report = run_verify_theorem(cfg)
    body = emit_report(report, args.format, include_runtime=args.runtime)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(body)
        summary = report_to_json(report, include_runtime=True)["summary"]
        _out(summary | {"runtime_seconds": round(report.runtime, 3)})
    else:
        sys.stdout.buffer.write(body)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def _pq_args(sp):
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="circtw", description="Circular colorings of bounded tree-width graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("oddgirth", help="odd-girth and an odd cycle if there is one")
    sp.add_argument("--graph", required=True)
    sp.set_defaults(func=cmd_oddgirth)

    sp = sub.add_parser("chi-c", help="exact circular chromatic number")
    sp.add_argument("--graph", required=True)
    sp.set_defaults(func=cmd_chi_c)

    sp = sub.add_parser("pq-color", help="find a (p,q)-coloring")
    sp.add_argument("--graph", required=True)
    _pq_args(sp)
    sp.add_argument("--precolor", help="comma-separated vertex:color pairs, 1-based vertices")
    sp.set_defaults(func=cmd_pq_color)

    sp = sub.add_parser("fset", help="extendable root precolorings of a rooted graph")
    sp.add_argument("--graph", required=True)
    _pq_args(sp)
    sp.add_argument("--method", choices=("auto", "dp", "solver"), default="auto")
    sp.add_argument("--members", action="store_true", help="list every member")
    sp.set_defaults(func=cmd_fset)

    sp = sub.add_parser("type", help="root distance matrix")
    sp.add_argument("--graph", required=True)
    sp.set_defaults(func=cmd_type)

    sp = sub.add_parser("reduce", help="bounded-type reduction of a bipartite rooted graph")
    sp.add_argument("--graph", required=True)
    _pq_args(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--probed-d", type=int)
    sp.add_argument("--order", choices=("lowest", "highest"), default="lowest")
    sp.add_argument("--trace", action="store_true")
    sp.add_argument("--verify-inclusion", action="store_true")
    sp.add_argument("--out", help="write the reduced graph here")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("gadgets", help="synthesize a gadget table")
    sp.add_argument("--k", type=int, required=True)
    _pq_args(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--type-bound", type=int, required=True)
    sp.add_argument("--budget", type=float, default=60.0, help="seconds for the shared search")
    sp.add_argument("--vertex-cap", type=int, default=10)
    sp.add_argument("--universe", choices=("auto", "clique", "forest"), default="auto")
    sp.add_argument("--out")
    sp.add_argument("--spot-check", type=int, default=0, metavar="N", help="sample N graphs per type")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gadgets)

    sp = sub.add_parser("bound", help="explicit odd-girth bound")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--value", action="store_true", help="print the full decimal value when materialized")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("probe-d", help="empirical extension distance")
    _pq_args(sp)
    sp.add_argument("--corpus", choices=("structured", "paths"), default="structured")
    sp.add_argument("--graph", nargs="+", help="rooted graph files; roots are the precolored vertices")
    sp.add_argument("--max-length", type=int, default=12)
    sp.add_argument("--max-vertices", type=int, default=18)
    sp.set_defaults(func=cmd_probe_d)

    sp = sub.add_parser("verify-lemma4", help="random checks of the glue-type invariant")
    sp.add_argument("--count", type=int, default=500)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--k", default="1,2,3", help="comma-separated tree-width values")
    sp.add_argument("--max-vertices", type=int, default=20)
    sp.set_defaults(func=cmd_verify_glue)

    sp = sub.add_parser("verify-theorem", help="colorability of partial k-trees by odd-girth")
    sp.add_argument("--k", type=int, required=True)
    _pq_args(sp)
    sp.add_argument("--girth-floor", type=int, default=3)
    sp.add_argument("--exhaustive-cap", type=int)
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-vertices", type=int, default=16)
    sp.add_argument("--keep", type=float, default=0.7, help="edge keep probability when sampling")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--runtime", action="store_true", help="include the runtime in the report")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify_theorem)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LemmaViolation as exc:
        print(f"circtw: property violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (CirctwError, ValueError, OSError) as exc:
        print(f"circtw: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
