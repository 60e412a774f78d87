"""Isomorphism-free enumeration of small partial k-trees.

Both generators grow graphs one vertex at a time, attaching the new vertex to
at most ``k`` existing vertices. That reaches every graph of tree-width at
most ``k``: such a graph always has a vertex of degree at most ``k`` whose
removal leaves a graph of the same kind. Duplicates are dropped with nauty
certificates (roots are individually colored, so rooted isomorphism is
respected).
"""

from __future__ import annotations

import time
from itertools import combinations
from typing import Iterator, Optional

import pynauty

from .graph import Bipartition, Graph, bipartition, is_bipartite
from .treewidth import RootedPartialKTree, certify


def nauty_key(g: Graph, roots=()) -> bytes:
    adjacency = {v: sorted(g.adj[v]) for v in range(g.n) if g.adj[v]}
    coloring = []
    if roots:
        rest = set(range(g.n)) - set(roots)
        coloring = [{r} for r in roots] + ([rest] if rest else [])
    cert = pynauty.certificate(pynauty.Graph(g.n, adjacency_dict=adjacency, vertex_coloring=coloring))
    return g.n.to_bytes(2, "big") + cert


def _children(g: Graph, min_deg: int, max_deg: int, bipartite: bool = False):
    """Graphs obtained by adding one vertex with ``min_deg..max_deg`` neighbors.

    With ``bipartite`` (and ``g`` bipartite), only bipartite children are
    produced: neighbors in a common component must share a side.
    """
    n = g.n
    side = comp = None
    if bipartite:
        parts = bipartition(g)
        if not isinstance(parts, Bipartition):
            return
        comp = [0] * n
        for i, members in enumerate(g.components()):
            for v in members:
                comp[v] = i
        side = [v in parts.red for v in range(n)]
    for size in range(min_deg, max_deg + 1):
        for nbrs in combinations(range(n), size):
            if bipartite and any(comp[a] == comp[b] and side[a] != side[b] for a, b in combinations(nbrs, 2)):
                continue
            yield Graph(n + 1, g.edges | frozenset((v, n) for v in nbrs))


def grow_rooted(k: int, vertex_cap: int, bipartite: bool = True, root_connected: bool = True,
                deadline: Optional[float] = None, root_clique: bool = True,
                status: Optional[dict] = None) -> Iterator[RootedPartialKTree]:
    """Rooted partial k-trees with roots ``0..k``, smallest first.

    With ``root_clique`` (the default) only graphs whose roots form a clique
    of some witnessing k-tree are produced, each with a certificate. Without
    it (``k = 1`` only) every forest with two roots is produced; root pairs at
    finite distance two or more carry no certificate.

    ``root_connected`` drops graphs with a component that avoids every root;
    such components never change the type or the F-set. ``deadline`` is a
    ``time.monotonic()`` value; generation stops quietly when it passes.
    If ``status`` is given, ``status["complete"]`` tells whether every graph
    up to the cap was produced.
    """
    if not root_clique and k != 1:
        raise ValueError("the root-free universe is only implemented for k = 1")
    if status is not None:
        status["complete"] = False
    roots = tuple(range(k + 1))
    level = {}
    for mask in range(1 << (k * (k + 1) // 2)):
        pairs = [e for i, e in enumerate(combinations(roots, 2)) if mask >> i & 1]
        g = Graph.from_edges(k + 1, pairs)
        if bipartite and not is_bipartite(g):
            continue
        key = nauty_key(g, roots)
        if key not in level:
            level[key] = RootedPartialKTree(g, k, roots, ())
    while level:
        reps = [level[key] for key in sorted(level)]
        for t in reps:
            yield t
        if not reps or reps[0].n >= vertex_cap:
            break
        nxt = {}
        for t in reps:
            if deadline is not None and time.monotonic() > deadline:
                return
            # A forest whose leaves are all roots is a union of root paths, so
            # attaching up to two neighbors reaches every rooted forest.
            max_deg = k if root_clique else 2
            for child in _children(t.graph, 1 if root_connected else 0, max_deg, bipartite):
                key = nauty_key(child, roots)
                if key in nxt:
                    continue
                cert = certify(child, roots, k)
                if cert is not None:
                    nxt[key] = cert
                elif not root_clique and treewidth_at_most(child, 1):
                    nxt[key] = RootedPartialKTree(child, k, roots, None)
        level = nxt
    if status is not None:
        status["complete"] = True


def grow_connected(k: int, vertex_cap: int, deadline: Optional[float] = None) -> Iterator[Graph]:
    """Connected graphs of tree-width at most ``k``, one per isomorphism class, smallest first.

    Levels are held as edge codes (see :meth:`Graph.code`) to keep memory low.
    """
    n = 1
    level = {nauty_key(Graph(1)): 0}
    while level:
        codes = [level[key] for key in sorted(level)]
        for code in codes:
            yield Graph.from_code(n, code)
        if n >= vertex_cap:
            return
        nxt = {}
        for code in codes:
            if deadline is not None and time.monotonic() > deadline:
                return
            for child in _children(Graph.from_code(n, code), 1, k):
                key = nauty_key(child)
                if key in nxt:
                    continue
                if treewidth_at_most(child, k):
                    nxt[key] = child.code()
        level = nxt
        n += 1


def treewidth_at_most(g: Graph, k: int) -> bool:
    """Elimination test: repeatedly remove a vertex whose filled neighborhood has size <= k.

    Greedy is exact for ``k <= 2`` (each elimination is then a minor
    operation); larger ``k`` falls back to the exact rooted search.
    """
    if g.n <= k + 1:
        return True
    if k <= 2:
        adj = [set(s) for s in g.adj]
        alive = set(range(g.n))
        while len(alive) > k + 1:
            v = next((u for u in sorted(alive) if len(adj[u]) <= k), None)
            if v is None:
                return False
            nbrs = adj[v]
            for a, b in combinations(nbrs, 2):
                adj[a].add(b)
                adj[b].add(a)
            for a in nbrs:
                adj[a].discard(v)
            alive.discard(v)
        return True
    return any(certify(g, roots, k) is not None for roots in combinations(range(g.n), k + 1))
