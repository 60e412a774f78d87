"""Simple undirected graphs plus the metric and parity primitives used everywhere.

Vertices are the integers ``0..n-1``. Distances use :data:`INF` for
"unreachable"; it is ``math.inf`` so that ``INF + x == INF`` and every finite
value compares below it.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import TooLarge

INF = math.inf

CANONICAL_FORM_CAP = 12


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset = field(default_factory=frozenset)
    labels: Optional[tuple] = None

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("labels must have one entry per vertex")
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        return cls(n, frozenset(edges), labels)

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on ``vertices`` (renumbered in the given order)."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(index), edges), index

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"

    def code(self) -> int:
        """Edge set as an integer; edge ``(u, v)`` with ``u < v`` is bit ``v*(v-1)//2 + u``."""
        out = 0
        for u, v in self.edges:
            out |= 1 << (v * (v - 1) // 2 + u)
        return out

    @classmethod
    def from_code(cls, n: int, code: int) -> "Graph":
        edges = []
        for v in range(1, n):
            base = v * (v - 1) // 2
            for u in range(v):
                if code >> (base + u) & 1:
                    edges.append((u, v))
        if code >> (n * (n - 1) // 2):
            raise ValueError(f"code has edges beyond {n} vertices")
        return cls(n, frozenset(edges))


# Named constructors used throughout tests and demos.

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(graphs: Sequence[Graph]) -> tuple[Graph, list[int]]:
    """Disjoint union; also returns the index offset of each part."""
    offsets, edges, n = [], [], 0
    for g in graphs:
        offsets.append(n)
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph.from_edges(n, edges), offsets


# -- metric primitives -------------------------------------------------------

def distances(g: Graph, sources: Iterable[int]) -> list:
    """Multi-source BFS distance to the nearest source (INF if unreachable)."""
    dist = [INF] * g.n
    queue = deque()
    for s in sources:
        if not 0 <= s < g.n:
            raise ValueError(f"source {s} is not a vertex")
        if dist[s] != 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def odd_girth(g: Graph):
    """Length of a shortest odd cycle, or INF when ``g`` is bipartite.

    BFS from every vertex; an edge joining two vertices on the same BFS layer
    at depth ``t`` closes an odd walk of length ``2t + 1``, and the minimum of
    these over all roots is exactly the shortest odd cycle.
    """
    best = INF
    for r in range(g.n):
        dist = distances(g, [r])
        for u, v in g.edges:
            du = dist[u]
            if du != INF and du == dist[v]:
                best = min(best, 2 * du + 1)
    return best


@dataclass(frozen=True)
class Bipartition:
    red: frozenset
    blue: frozenset

    def color_of(self, v: int) -> str:
        return "red" if v in self.red else "blue"


@dataclass(frozen=True)
class OddCycleWitness:
    """An odd closed walk given as its vertex sequence (last vertex joins the first)."""

    vertices: tuple

    @property
    def length(self) -> int:
        return len(self.vertices)


def bipartition(g: Graph):
    """2-color ``g`` or return an odd cycle.

    In each component the smallest-index vertex is red, so the output is a
    function of the graph alone.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return OddCycleWitness(_tree_cycle(u, w, parent, depth))
    red = frozenset(v for v in range(g.n) if side[v] == 0)
    blue = frozenset(v for v in range(g.n) if side[v] == 1)
    return Bipartition(red, blue)


def _tree_cycle(u, w, parent, depth):
    # climb both BFS-tree paths to their meeting point
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return tuple(left + right[::-1])


def is_bipartite(g: Graph) -> bool:
    return isinstance(bipartition(g), Bipartition)


def contract_closed_neighborhood(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Replace N[v] by one new vertex.

    Surviving vertices keep their relative order; the merged vertex takes the
    highest index. Returns the new graph and the surjective old->new map.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"{v} is not a vertex")
    closed = set(g.adj[v]) | {v}
    mapping = {}
    nxt = 0
    for u in range(g.n):
        if u not in closed:
            mapping[u] = nxt
            nxt += 1
    merged = nxt
    for u in closed:
        mapping[u] = merged
    edges = set()
    for a, b in g.edges:
        x, y = mapping[a], mapping[b]
        if x != y:
            edges.add(_norm_edge(x, y))
    return Graph(merged + 1, frozenset(edges)), mapping


# -- canonical form ----------------------------------------------------------

def canonical_form(g: Graph, vertex_colors: Optional[Sequence] = None) -> str:
    """String that is equal for two graphs iff they are isomorphic.

    ``vertex_colors`` (optional) must be preserved by the isomorphism. Capped
    at 12 vertices.
    """
    if g.n > CANONICAL_FORM_CAP:
        raise TooLarge(f"canonical_form is capped at {CANONICAL_FORM_CAP} vertices, got {g.n}")
    matrix = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        matrix[u][v] = matrix[v][u] = 1
    colors = list(vertex_colors) if vertex_colors is not None else [0] * g.n
    return canonical_matrix_form(matrix, colors)


def canonical_matrix_form(matrix: Sequence[Sequence[int]], colors: Sequence) -> str:
    """Canonical string of a symmetric small-integer matrix with vertex colors.

    Individualization/refinement search; leaves that differ only by swapping
    two structural twins are skipped because that swap is an automorphism
    fixing everything chosen so far.
    """
    n = len(matrix)
    if n == 0:
        return "0:"
    rows = [tuple(r) for r in matrix]
    color_keys = sorted(set(colors), key=repr)
    start = [[v for v in range(n) if colors[v] == c] for c in color_keys]
    twin_class = _twin_classes(rows, colors)
    best = [None]

    def leaf_string(order):
        bits = "".join(str(rows[order[i]][order[j]]) for i in range(n) for j in range(i + 1, n))
        head = ",".join(repr(colors[v]) for v in order)
        return f"{n}:{head}:{bits}"

    def search(partition):
        partition = _refine(rows, partition)
        target = next((c for c in partition if len(c) > 1), None)
        if target is None:
            s = leaf_string([c[0] for c in partition])
            if best[0] is None or s > best[0]:
                best[0] = s
            return
        ti = partition.index(target)
        tried = set()
        for v in target:
            if twin_class[v] in tried:
                continue
            tried.add(twin_class[v])
            rest = [u for u in target if u != v]
            search(partition[:ti] + [[v], rest] + partition[ti + 1:])

    search(start)
    return best[0]


def _twin_classes(rows, colors):
    n = len(rows)
    cls = list(range(n))
    for u in range(n):
        for w in range(u):
            if cls[w] != w or colors[u] != colors[w]:
                continue
            same = all(rows[u][x] == rows[w][x] for x in range(n) if x != u and x != w)
            if same and rows[u][u] == rows[w][w]:
                cls[u] = w
                break
    return cls


def _refine(rows, partition):
    """Equitable refinement: split cells by their count profile into every cell."""
    partition = [list(c) for c in partition]
    while True:
        cell_of = {}
        for i, c in enumerate(partition):
            for v in c:
                cell_of[v] = i
        new = []
        changed = False
        for c in partition:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {}
            for v in c:
                counts = {}
                for i, cell in enumerate(partition):
                    tally = {}
                    for x in cell:
                        if x != v:
                            val = rows[v][x]
                            if val:
                                tally[val] = tally.get(val, 0) + 1
                    counts[i] = tuple(sorted(tally.items()))
                prof = tuple(counts[i] for i in range(len(partition)))
                sig.setdefault(prof, []).append(v)
            if len(sig) > 1:
                changed = True
                for key in sorted(sig):
                    new.append(sig[key])
            else:
                new.append(c)
        partition = new
        if not changed:
            return partition
