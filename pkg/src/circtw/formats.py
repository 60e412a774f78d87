"""Text format for graphs and rooted partial k-trees.

::

    c comment lines are ignored
    p <n> <m>
    e <u> <v>              (m lines, 1-based endpoints)
    r <v1> ... <v_{k+1}>   (optional roots; k is one less than their number)
    b <v> <c1> ... <ck>    (optional certificate, in build order)

A rooted file without ``b`` lines is read as uncertified unless the roots are
the only vertices.
"""

from __future__ import annotations

from typing import Union

from .errors import ParseError
from .graph import Graph
from .treewidth import RootedPartialKTree


def _ints(parts, lineno, what):
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise ParseError(f"non-integer field in {what} line", lineno) from None


def parse_graph_file(text: str) -> Union[Graph, RootedPartialKTree]:
    n = m = None
    edges, roots, cert = [], None, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tag, *rest = line.split()
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(rest) != 2:
                raise ParseError("expected 'p <n> <m>'", lineno)
            n, m = _ints(rest, lineno, "p")
            if n < 0 or m < 0:
                raise ParseError("negative size", lineno)
            continue
        if n is None:
            raise ParseError(f"'{tag}' line before the 'p' line", lineno)
        if tag == "e":
            if len(rest) != 2:
                raise ParseError("expected 'e <u> <v>'", lineno)
            u, v = _ints(rest, lineno, "e")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"edge endpoint out of range 1..{n}", lineno)
            if u == v:
                raise ParseError("self-loop", lineno)
            edges.append((u - 1, v - 1))
        elif tag == "r":
            if roots is not None:
                raise ParseError("duplicate root line", lineno)
            vals = _ints(rest, lineno, "r")
            if not vals or any(not 1 <= x <= n for x in vals):
                raise ParseError(f"root out of range 1..{n}", lineno)
            roots = tuple(x - 1 for x in vals)
        elif tag == "b":
            vals = _ints(rest, lineno, "b")
            if not vals or any(not 1 <= x <= n for x in vals):
                raise ParseError(f"certificate vertex out of range 1..{n}", lineno)
            cert.append((vals[0] - 1, tuple(x - 1 for x in vals[1:])))
        else:
            raise ParseError(f"unknown line type '{tag}'", lineno)
    if n is None:
        raise ParseError("missing 'p <n> <m>' line")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    g = Graph.from_edges(n, edges)
    if len(g.edges) != m:
        raise ParseError("duplicate edges")
    if roots is None:
        if cert:
            raise ParseError("certificate lines need a root line")
        return g
    k = len(roots) - 1
    if cert or n == len(roots):
        return RootedPartialKTree(g, k, roots, tuple(cert))
    return RootedPartialKTree(g, k, roots, None)


def emit_graph(obj: Union[Graph, RootedPartialKTree]) -> str:
    g = obj.graph if isinstance(obj, RootedPartialKTree) else obj
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    if isinstance(obj, RootedPartialKTree):
        lines.append("r " + " ".join(str(r + 1) for r in obj.roots))
        for v, clique in obj.certificate or ():
            lines.append(" ".join(["b", str(v + 1)] + [str(c + 1) for c in clique]))
    return "\n".join(lines) + "\n"


def read_graph(path) -> Union[Graph, RootedPartialKTree]:
    with open(path) as fh:
        return parse_graph_file(fh.read())


def write_graph(path, obj) -> None:
    with open(path, "w") as fh:
        fh.write(emit_graph(obj))
