"""Rooted partial k-trees, gluing, and the balanced split.

A :class:`RootedPartialKTree` always carries the k-tree build sequence that
witnesses its tree-width (``certificate``): start from a (k+1)-clique on the
roots, then each entry ``(v, clique)`` attaches a new vertex ``v`` to a
k-clique. Every entry defines a bag ``clique + (v,)``; the root tuple is the
first bag. ``certificate=None`` marks a rooted graph whose tree-width is not
certified; such graphs are accepted by the metric and coloring code but
fail :func:`validate`.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .config import REJECTION_LIMIT
from .errors import BudgetExhausted, KMismatch, TooSmall
from .graph import INF, Graph, _norm_edge, odd_girth


@dataclass(frozen=True)
class RootedPartialKTree:
    graph: Graph
    k: int
    roots: tuple
    certificate: Optional[tuple] = ()

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(self.roots))
        if self.certificate is not None:
            cert = tuple((v, tuple(c)) for v, c in self.certificate)
            object.__setattr__(self, "certificate", cert)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def certified(self) -> bool:
        return self.certificate is not None


def rooted(graph: Graph, roots: Sequence[int], certificate=None, k: Optional[int] = None):
    """Shorthand constructor; ``k`` defaults to ``len(roots) - 1``."""
    k = len(roots) - 1 if k is None else k
    return RootedPartialKTree(graph, k, tuple(roots), certificate)


def validate(t: RootedPartialKTree) -> Optional[str]:
    """Replay the certificate. Returns ``None`` if valid, else the first violation."""
    k, g = t.k, t.graph
    if len(t.roots) != k + 1:
        return f"expected {k + 1} roots, got {len(t.roots)}"
    if len(set(t.roots)) != len(t.roots):
        return "roots are not pairwise distinct"
    for r in t.roots:
        if not 0 <= r < g.n:
            return f"root {r} is not a vertex"
    if t.certificate is None:
        return "no certificate"
    present = set(t.roots)
    ktree = {_norm_edge(a, b) for a, b in combinations(t.roots, 2)}
    for step, (v, clique) in enumerate(t.certificate):
        if not 0 <= v < g.n:
            return f"certificate entry {step}: {v} is not a vertex"
        if v in present:
            return f"certificate entry {step}: vertex {v} introduced twice"
        if len(clique) != k or len(set(clique)) != k:
            return f"certificate entry {step}: attachment must be {k} distinct vertices"
        for c in clique:
            if c not in present:
                return f"certificate entry {step}: attachment vertex {c} not yet built"
        for a, b in combinations(clique, 2):
            if _norm_edge(a, b) not in ktree:
                return f"certificate entry {step}: attachment {clique} is not a clique"
        present.add(v)
        ktree.update(_norm_edge(v, c) for c in clique)
    if len(present) != g.n:
        missing = sorted(set(range(g.n)) - present)
        return f"vertices {missing} never introduced by the certificate"
    for e in g.sorted_edges():
        if e not in ktree:
            return f"edge {e} is absent from the replayed {k}-tree"
    return None


def ktree_edges(t: RootedPartialKTree) -> set:
    """Edge set of the k-tree the certificate builds."""
    edges = {_norm_edge(a, b) for a, b in combinations(t.roots, 2)}
    for v, clique in t.certificate:
        edges.update(_norm_edge(v, c) for c in clique)
    return edges


# -- bag tree ----------------------------------------------------------------

def bag_tree(t: RootedPartialKTree) -> tuple[list[tuple], list[int]]:
    """Bags and parent pointers of the decomposition the certificate induces.

    Bag 0 is the root tuple; bag ``i + 1`` is ``clique + (v,)`` of entry ``i``.
    The parent of an entry's bag is the earliest bag containing its clique.
    """
    bags = [tuple(t.roots)]
    parent = [-1]
    for v, clique in t.certificate:
        need = set(clique)
        parent.append(next(i for i, b in enumerate(bags) if need.issubset(b)))
        bags.append(tuple(clique) + (v,))
    return bags, parent


def certificate_from_decomposition(n: int, roots: Sequence[int], bags: Sequence, tree_adj: Sequence,
                                   root_bag: int, k: int) -> tuple:
    """k-tree build sequence from any width-<=k tree decomposition.

    Every root that occurs in some bag must occur in ``bags[root_bag]``. The walk keeps a full
    (k+1)-clique per visited bag and swaps in the new vertices of each child
    one at a time, dropping a vertex the child does not need.
    """
    introduced = set(roots)
    full = {}
    cert = []

    def enter(node, clique):
        want = set(bags[node])
        for x in sorted(want - introduced):
            drop = next(c for c in sorted(clique) if c not in want)
            clique.remove(drop)
            cert.append((x, tuple(clique)))
            clique.append(x)
            introduced.add(x)
        full[node] = clique

    enter(root_bag, list(roots))
    stack = [root_bag]
    seen = {root_bag}
    while stack:
        node = stack.pop()
        for child in sorted(tree_adj[node], reverse=True):
            if child in seen:
                continue
            seen.add(child)
            enter(child, list(full[node]))
            stack.append(child)
    leftovers = sorted(set(range(n)) - introduced)
    if leftovers:
        # vertices in no bag are isolated; hang them off the root clique
        base = list(roots)
        for x in leftovers:
            cert.append((x, tuple(base[1:])))
    return tuple(cert)


# -- gluing ------------------------------------------------------------------

def glue_with_maps(a: RootedPartialKTree, b: RootedPartialKTree):
    """``a ⊕ b`` plus the vertex maps of ``a`` and ``b`` into the result."""
    if a.k != b.k:
        raise KMismatch(f"cannot glue k={a.k} with k={b.k}")
    map_a = {v: v for v in range(a.n)}
    map_b = {}
    root_pos = {r: i for i, r in enumerate(b.roots)}
    nxt = a.n
    for v in range(b.n):
        if v in root_pos:
            map_b[v] = a.roots[root_pos[v]]
        else:
            map_b[v] = nxt
            nxt += 1
    edges = set(a.graph.edges)
    edges.update(_norm_edge(map_b[u], map_b[v]) for u, v in b.graph.edges)
    cert = None
    if a.certificate is not None and b.certificate is not None:
        cert = a.certificate + tuple((map_b[v], tuple(map_b[c] for c in clique))
                                     for v, clique in b.certificate)
    glued = RootedPartialKTree(Graph(nxt, frozenset(edges)), a.k, a.roots, cert)
    return glued, map_a, map_b


def glue(a: RootedPartialKTree, b: RootedPartialKTree) -> RootedPartialKTree:
    """Identify ``a.roots[i]`` with ``b.roots[i]``; the result is rooted there."""
    return glue_with_maps(a, b)[0]


def glue_all(parts: Sequence[RootedPartialKTree]) -> RootedPartialKTree:
    out = parts[0]
    for p in parts[1:]:
        out = glue(out, p)
    return out


def isolated_roots(k: int) -> RootedPartialKTree:
    """k+1 isolated vertices, rooted at themselves."""
    return RootedPartialKTree(Graph(k + 1), k, tuple(range(k + 1)), ())


# -- split -------------------------------------------------------------------

def split_with_maps(t: RootedPartialKTree, n: int):
    """Cut ``t`` into ``(G1, G2)`` sharing one bag, with ``n+1 <= |V(G1)| <= 2n``.

    Returns ``(G1, G2, map1, map2)`` where ``map_i[j]`` is the vertex of ``t``
    that vertex ``j`` of ``G_i`` came from. ``glue(G1, G2)`` rebuilds ``t``.
    """
    k = t.k
    if n < k + 1:
        raise ValueError(f"n must be at least k+1={k + 1}")
    if t.n < 3 * n:
        raise TooSmall(f"need at least {3 * n} vertices, got {t.n}")
    if t.certificate is None:
        raise ValueError("split needs a certified rooted partial k-tree")
    bags, parent = bag_tree(t)
    children = [[] for _ in bags]
    for i, p in enumerate(parent):
        if p >= 0:
            children[p].append(i)
    size = [1] * len(bags)
    for i in range(len(bags) - 1, 0, -1):
        size[parent[i]] += size[i]
    size[0] -= 1  # root bag introduces no vertex

    low, high = n - k, 2 * n - k - 1  # bag counts giving n+1..2n vertices
    node = 0
    while True:
        kids = children[node]
        big = next((c for c in kids if size[c] > high), None)
        if big is not None:
            node = big
            continue
        hit = next((c for c in kids if low <= size[c] <= high), None)
        if hit is not None:
            chosen = [hit]
        else:
            chosen, total = [], 0
            for c in kids:
                chosen.append(c)
                total += size[c]
                if total >= low:
                    break
        break

    cut = set()
    stack = list(chosen)
    while stack:
        b = stack.pop()
        cut.add(b)
        stack.extend(children[b])

    shared = list(bags[node])
    first_vertices = shared + [t.certificate[b - 1][0] for b in sorted(cut)]
    second_vertices = shared + [v for v in range(t.n) if v not in set(first_vertices)]
    idx1 = {v: i for i, v in enumerate(first_vertices)}
    idx2 = {v: i for i, v in enumerate(second_vertices)}

    g1_edges, g2_edges = [], []
    for u, v in t.graph.edges:
        if u in idx1 and v in idx1:
            g1_edges.append((idx1[u], idx1[v]))
        else:
            g2_edges.append((idx2[u], idx2[v]))
    k1 = tuple(range(k + 1))
    cert1 = tuple((idx1[t.certificate[b - 1][0]], tuple(idx1[c] for c in t.certificate[b - 1][1]))
                  for b in sorted(cut))
    g1 = RootedPartialKTree(Graph.from_edges(len(first_vertices), g1_edges), k, k1, cert1)

    rest = [i for i in range(len(bags)) if i not in cut]
    adj = {i: [] for i in rest}
    for i in rest:
        if parent[i] >= 0:
            adj[i].append(parent[i])
            adj[parent[i]].append(i)
    rest_bags = {i: [idx2[v] for v in bags[i]] for i in rest}
    cert2 = certificate_from_decomposition(len(second_vertices), k1, rest_bags, adj, node, k)
    g2 = RootedPartialKTree(Graph.from_edges(len(second_vertices), g2_edges), k, k1, cert2)
    return g1, g2, first_vertices, second_vertices


def split(t: RootedPartialKTree, n: int) -> tuple[RootedPartialKTree, RootedPartialKTree]:
    g1, g2, _, _ = split_with_maps(t, n)
    return g1, g2


# -- random generation -------------------------------------------------------

def random_ktree(k: int, n: int, rng: random.Random) -> tuple[set, tuple]:
    """Random k-tree on n vertices: each new vertex attaches to a k-subset of a random bag."""
    roots = tuple(range(k + 1))
    bags = [roots]
    cert = []
    edges = {_norm_edge(a, b) for a, b in combinations(roots, 2)}
    for v in range(k + 1, n):
        bag = bags[rng.randrange(len(bags))]
        drop = rng.randrange(k + 1)
        clique = tuple(x for i, x in enumerate(bag) if i != drop)
        cert.append((v, clique))
        bags.append(clique + (v,))
        edges.update(_norm_edge(v, c) for c in clique)
    return edges, tuple(cert)


def random_partial_k_tree(k: int, n: int, edge_keep_prob: float, min_odd_girth=3, seed=0,
                          max_rejections: int = REJECTION_LIMIT) -> RootedPartialKTree:
    """Random certified partial k-tree, resampled until ``odd_girth >= min_odd_girth``.

    ``min_odd_girth=INF`` asks for a bipartite graph. Deterministic in ``seed``.
    """
    if n < k + 1:
        raise ValueError("n must be at least k+1")
    if not 0 <= edge_keep_prob <= 1:
        raise ValueError("edge_keep_prob must lie in [0, 1]")
    rng = random.Random(seed)
    for _ in range(max_rejections + 1):
        ktree, cert = random_ktree(k, n, rng)
        kept = [e for e in sorted(ktree) if rng.random() < edge_keep_prob]
        g = Graph.from_edges(n, kept)
        if odd_girth(g) >= min_odd_girth:
            return RootedPartialKTree(g, k, tuple(range(k + 1)), cert)
    raise BudgetExhausted(f"no graph with odd girth >= {min_odd_girth} after {max_rejections} rejections")


def random_bipartite_partial_k_tree(k: int, n: int, edge_keep_prob: float, seed=0,
                                    root_sides: Optional[Sequence[int]] = None) -> RootedPartialKTree:
    """Random certified bipartite partial k-tree.

    Draws a random k-tree and a random 2-coloring of its vertices, keeps only
    the bichromatic edges, then thins those with ``edge_keep_prob``. No
    rejection, so it scales to sizes where random graphs are almost never
    bipartite. ``root_sides`` fixes the side of each root.
    """
    rng = random.Random(seed)
    ktree, cert = random_ktree(k, n, rng)
    side = [rng.randrange(2) for _ in range(n)]
    if root_sides is not None:
        side[:k + 1] = root_sides
    kept = [e for e in sorted(ktree) if side[e[0]] != side[e[1]] and rng.random() < edge_keep_prob]
    return RootedPartialKTree(Graph.from_edges(n, kept), k, tuple(range(k + 1)), cert)


def certify(graph: Graph, roots: Sequence[int], k: int, cap: int = 16) -> Optional[RootedPartialKTree]:
    """Find a certificate for ``graph`` rooted at ``roots``, or ``None`` if none exists.

    Exact search for an elimination order of the non-root vertices in which
    every vertex has at most ``k`` neighbors (through already eliminated
    vertices) when it goes; the roots are treated as a clique. Exponential in
    the number of non-root vertices, hence the ``cap``.
    """
    n = graph.n
    roots = tuple(roots)
    if len(roots) != k + 1:
        raise ValueError(f"expected {k + 1} roots, got {len(roots)}")
    if k == 1:
        return _certify_forest(graph, roots)
    if n > cap:
        raise ValueError(f"certify is capped at {cap} vertices")
    others = [v for v in range(n) if v not in set(roots)]
    adj = [set(graph.adj[v]) for v in range(n)]
    for a, b in combinations(roots, 2):
        adj[a].add(b)
        adj[b].add(a)
    bit = {v: 1 << i for i, v in enumerate(others)}
    full = (1 << len(others)) - 1

    def frontier(gone, v):
        # vertices outside gone+{v} reachable from v through eliminated vertices
        out, seen, stack = set(), {v}, [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in seen:
                    continue
                seen.add(w)
                if w in bit and gone & bit[w]:
                    stack.append(w)
                else:
                    out.add(w)
        return out

    dead = set()
    order = []

    def search(gone):
        if gone == full:
            return True
        if gone in dead:
            return False
        for v in others:
            if gone & bit[v]:
                continue
            q = frontier(gone, v)
            if len(q) <= k:
                order.append((v, q))
                if search(gone | bit[v]):
                    return True
                order.pop()
        dead.add(gone)
        return False

    if not search(0):
        return None
    # bag of each eliminated vertex hangs below the bag of its earliest-eliminated neighbor
    pos = {v: i for i, (v, _) in enumerate(order)}
    bags = [set(roots)] + [{v} | q for v, q in order]
    tree_adj = [[] for _ in bags]
    for i, (v, q) in enumerate(order):
        later = [pos[w] for w in q if w in pos]
        par = 1 + min(later) if later else 0
        tree_adj[i + 1].append(par)
        tree_adj[par].append(i + 1)
    cert = certificate_from_decomposition(n, roots, bags, tree_adj, 0, k)
    return RootedPartialKTree(graph, k, roots, cert)


def _certify_forest(graph: Graph, roots: tuple) -> Optional[RootedPartialKTree]:
    # k = 1: a forest whose two roots are adjacent or in different trees
    a, b = roots
    if graph.m >= graph.n:
        return None
    seen = {a, b}
    cert = []
    starts = [a, b] + [v for v in range(graph.n) if v not in (a, b)]
    for s in starts:
        if s not in seen:
            seen.add(s)
            cert.append((s, (b,)))
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(graph.adj[u]):
                if w not in seen:
                    seen.add(w)
                    cert.append((w, (u,)))
                    queue.append(w)
    allowed = {_norm_edge(v, c[0]) for v, c in cert} | {_norm_edge(a, b)}
    if not graph.edges <= allowed:
        return None
    return RootedPartialKTree(graph, 1, roots, tuple(cert))


def as_rooted(t: RootedPartialKTree, roots: Sequence[int]) -> RootedPartialKTree:
    """Same graph and k-tree, rooted at another bag of the certificate."""
    bags, parent = bag_tree(t)
    target = set(roots)
    node = next((i for i, b in enumerate(bags) if set(b) == target), None)
    if node is None:
        raise ValueError(f"{tuple(roots)} is not a bag of the certificate")
    adj = [[] for _ in bags]
    for i, p in enumerate(parent):
        if p >= 0:
            adj[i].append(p)
            adj[p].append(i)
    cert = certificate_from_decomposition(t.n, tuple(roots), bags, adj, node, t.k)
    return RootedPartialKTree(t.graph, t.k, tuple(roots), cert)


__all__ = [
    "INF", "RootedPartialKTree", "rooted", "validate", "ktree_edges", "bag_tree",
    "certificate_from_decomposition", "glue", "glue_with_maps", "glue_all", "isolated_roots",
    "split", "split_with_maps", "random_ktree", "random_partial_k_tree",
    "random_bipartite_partial_k_tree", "as_rooted", "certify",
]
