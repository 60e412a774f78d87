"""Type reduction of bipartite rooted partial k-trees.

Given a bipartite rooted graph of type ``M``, :func:`reduce_type` builds a
rooted graph whose type has all finite entries at most ``D**((k+1)**2)``
(``D = 4d``), lies above ``M`` in the type order, and whose F-set is
contained in the original one whenever ``d`` is a valid extension distance
for (p, q). The containment is not assumed; :func:`verify_f_inclusion`
measures it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .circular import PQParams
from .errors import LemmaViolation, NonEquivalenceCloseness, NotBipartite
from .graph import INF, Bipartition, Graph, bipartition, contract_closed_neighborhood, distances
from .precolor import FSet, decode, f_set
from .treewidth import RootedPartialKTree, bag_tree, certificate_from_decomposition, isolated_roots, validate
from .typelattice import TypeMatrix, is_bipartite_type, leq, type_of


@dataclass(frozen=True)
class ReductionParams:
    p: int
    q: int
    d: int
    probed_d: Optional[int] = None

    def __post_init__(self):
        if self.p <= 2 * self.q:
            raise ValueError(f"need p/q > 2, got {self.p}/{self.q}")
        if self.d < 1:
            raise ValueError("d must be at least 1")

    @property
    def D(self) -> int:
        return 4 * self.d

    @property
    def pq(self) -> PQParams:
        return PQParams(self.p, self.q)

    @property
    def structural_only(self) -> bool:
        """True when F-set containment is not expected to be guaranteed.

        That is the case for d = 1 (the extension distance is at least 2) and
        whenever d is below a probed lower bound.
        """
        return self.d < 2 or (self.probed_d is not None and self.d < self.probed_d)


@dataclass(frozen=True)
class ReductionTrace:
    i0: int
    intervals_checked: tuple
    classes: tuple
    contraction_log: tuple
    predicted_type: TypeMatrix
    threshold: Optional[int] = None
    structural_only: bool = False


def gap_index(m: TypeMatrix, D: int) -> tuple[int, list]:
    """Smallest i such that no entry of ``m`` lies in ``[D**(i-1), D**i - 1]``."""
    entries = [x for x in m.pairs() if x != INF]
    checked = []
    for i in range(1, (m.k + 1) ** 2 + 1):
        lo, hi = D ** (i - 1), D ** i - 1
        hits = sorted(x for x in entries if lo <= x <= hi)
        checked.append((i, lo, hi, tuple(hits)))
        if not hits:
            return i, checked
    raise AssertionError("more entries than intervals")


def close_classes(m: TypeMatrix, threshold: int) -> list[tuple]:
    """Classes of roots at distance at most ``threshold``; raises if not transitive."""
    size = m.k + 1
    classes = []
    assigned = [None] * size
    for i in range(size):
        if assigned[i] is not None:
            continue
        members = [j for j in range(size) if m[i, j] <= threshold]
        for j in members:
            if assigned[j] is not None:
                raise NonEquivalenceCloseness("closeness is not transitive", dump={"type": m, "threshold": threshold})
            assigned[j] = len(classes)
        classes.append(tuple(members))
    for cls in classes:
        for a in cls:
            for b in cls:
                if m[a, b] > threshold:
                    raise NonEquivalenceCloseness("closeness is not transitive",
                                                  dump={"type": m, "threshold": threshold, "class": cls})
    return classes


def _shrink_class(t: RootedPartialKTree, side: Bipartition, members: tuple, threshold: int,
                  bags: Optional[list], order: str):
    """Contract far blue neighborhoods around one class of roots and keep its component."""
    g = t.graph
    root_vertices = [t.roots[i] for i in members]
    component = next(c for c in g.components() if root_vertices[0] in c)
    cur, index = g.induced(component)
    blue = [v in side.blue for v in component]
    origin = list(component)
    keep = set(component)
    cur_bags = None
    if bags is not None:
        cur_bags = [{index[v] for v in bag if v in keep} for bag in bags]
    roots = [index[v] for v in root_vertices]
    log = []
    while True:
        dist = distances(cur, roots)
        far = [v for v in range(cur.n) if blue[v] and dist[v] >= threshold]
        if not far:
            break
        v = min(far) if order == "lowest" else max(far)
        log.append(origin[v])
        cur, mapping = contract_closed_neighborhood(cur, v)
        new_blue = [False] * cur.n
        new_origin = [None] * cur.n
        for old, new in mapping.items():
            if mapping[old] != cur.n - 1:
                new_blue[new] = blue[old]
                new_origin[new] = origin[old]
        blue, origin = new_blue, new_origin
        roots = [mapping[r] for r in roots]
        if cur_bags is not None:
            cur_bags = [{mapping[x] for x in bag} for bag in cur_bags]
    return cur, roots, cur_bags, tuple(log)


def reduce_type(t: RootedPartialKTree, params: ReductionParams, order: str = "lowest",
                check: bool = True) -> tuple[RootedPartialKTree, ReductionTrace]:
    """Reduce a bipartite rooted partial k-tree to one of bounded type.

    ``order`` picks which far blue vertex is contracted first ("lowest" or
    "highest" index); the output should not depend on it up to isomorphism.
    With ``check`` the structural guarantees are asserted before returning.
    """
    side = bipartition(t.graph)
    if not isinstance(side, Bipartition):
        raise NotBipartite(f"odd cycle {side.vertices}")
    k, D = t.k, params.D
    m = type_of(t)
    i0, checked = gap_index(m, D)
    if i0 == 1:
        out = isolated_roots(k)
        trace = ReductionTrace(1, tuple(checked), tuple((i,) for i in range(k + 1)), (),
                               TypeMatrix.all_infinite(k), None, params.structural_only)
        return out, trace

    threshold = D ** (i0 - 1)
    classes = close_classes(m, threshold)
    bags, parent = bag_tree(t) if t.certified else (None, None)

    parts = []
    logs = []
    for members in classes:
        g_i, roots_i, bags_i, log = _shrink_class(t, side, members, threshold, bags, order)
        parts.append((members, g_i, roots_i, bags_i))
        logs.append(log)

    edges, offset = [], 0
    root_of = [None] * (k + 1)
    all_bags, adj = [], []
    for members, g_i, roots_i, bags_i in parts:
        edges.extend((u + offset, v + offset) for u, v in g_i.edges)
        for j, r in zip(members, roots_i):
            root_of[j] = r + offset
        if bags_i is not None:
            base = len(all_bags)
            all_bags.extend({x + offset for x in bag} for bag in bags_i)
            adj.extend([] for _ in bags_i)
            for child, par in enumerate(parent):
                if par >= 0:
                    adj[base + child].append(base + par)
                    adj[base + par].append(base + child)
        offset += g_i.n
    graph = Graph.from_edges(offset, edges)

    cert = None
    if t.certified:
        hub = len(all_bags)
        all_bags.append(set(root_of))
        adj.append([])
        base = 0
        for members, g_i, roots_i, bags_i in parts:
            adj[hub].append(base)
            adj[base].append(hub)
            base += len(bags_i)
        cert = certificate_from_decomposition(offset, root_of, all_bags, adj, hub, k)

    out = RootedPartialKTree(graph, k, tuple(root_of), cert)
    predicted = TypeMatrix(k, tuple(tuple(m[i, j] if m[i, j] <= threshold else INF for j in range(k + 1))
                                    for i in range(k + 1)))
    trace = ReductionTrace(i0, tuple(checked), tuple(classes), tuple(logs), predicted, threshold,
                           params.structural_only)
    if check:
        check_reduction(t, out, trace, params)
    return out, trace


def check_reduction(original: RootedPartialKTree, reduced: RootedPartialKTree, trace: ReductionTrace,
                    params: ReductionParams) -> None:
    """Assert the structural guarantees of :func:`reduce_type`."""
    problems = []
    if not isinstance(bipartition(reduced.graph), Bipartition):
        problems.append("output is not bipartite")
    got = type_of(reduced)
    if got != trace.predicted_type:
        problems.append(f"type {got.entries} differs from predicted {trace.predicted_type.entries}")
    if not is_bipartite_type(trace.predicted_type):
        problems.append("predicted type is not bipartite")
    if not leq(type_of(original), trace.predicted_type):
        problems.append("input type is not below the predicted type")
    cap = params.D ** ((original.k + 1) ** 2)
    if any(x != INF and x > cap for x in trace.predicted_type.pairs()):
        problems.append(f"finite entry above {cap}")
    if original.certified:
        why = validate(reduced)
        if why is not None:
            problems.append(f"rebuilt certificate invalid: {why}")
    if problems:
        raise LemmaViolation("; ".join(problems), dump={"original": original, "reduced": reduced, "trace": trace})


@dataclass(frozen=True)
class InclusionReport:
    holds: bool
    d: int
    structural_only: bool
    reduced_size: int
    original_size: int
    witness: Optional[tuple] = None


def verify_f_inclusion(original: RootedPartialKTree, reduced: RootedPartialKTree, pq: PQParams,
                       d: Optional[int] = None, structural_only: bool = False) -> InclusionReport:
    """Brute-force check that every precoloring extending ``reduced`` extends ``original``."""
    fo = f_set(original, pq)
    fr = f_set(reduced, pq)
    extra = fr.bits & ~fo.bits
    witness = None
    if extra:
        low = (extra & -extra).bit_length() - 1
        witness = decode(low, pq.p, original.k + 1)
    return InclusionReport(extra == 0, d, structural_only, len(fr), len(fo), witness)


__all__ = [
    "ReductionParams", "ReductionTrace", "gap_index", "close_classes", "reduce_type",
    "check_reduction", "InclusionReport", "verify_f_inclusion",
]
