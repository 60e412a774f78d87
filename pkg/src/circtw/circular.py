"""Exact (p,q)-coloring, circular chromatic number, and odd-cycle homomorphisms.

A (p,q)-coloring uses colors ``0..p-1`` and requires
``q <= |c(u) - c(v)| <= p - q`` on every edge, i.e. circular distance at
least ``q``. Two engines decide it:

* forward-checking backtracking over bitmask domains, for any graph;
* dynamic programming over the bag tree of a certified rooted partial
  k-tree, whose root table is exactly the set of extendable root colorings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping, Optional, Union

import numpy as np

from .config import STATE_LIMIT
from .errors import BudgetExhausted, InvalidPrecoloring, TooLarge
from .graph import Graph, is_bipartite
from .treewidth import RootedPartialKTree, bag_tree


@dataclass(frozen=True)
class PQParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("p and q must be positive")

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.p, self.q)

    def require_above_two(self):
        if self.p <= 2 * self.q:
            raise ValueError(f"need p/q > 2, got {self.p}/{self.q}")

    def ok(self, a: int, b: int) -> bool:
        """Whether colors ``a`` and ``b`` may sit on adjacent vertices."""
        return self.q <= abs(a - b) <= self.p - self.q


@dataclass(frozen=True)
class CircularColoring:
    assignment: tuple

    def __getitem__(self, v):
        return self.assignment[v]

    def is_valid(self, g: Graph, pq: PQParams) -> bool:
        if len(self.assignment) != g.n:
            return False
        if any(not 0 <= c < pq.p for c in self.assignment):
            return False
        return all(pq.ok(self.assignment[u], self.assignment[v]) for u, v in g.edges)


def compat_matrix(pq: PQParams) -> np.ndarray:
    c = np.arange(pq.p)
    diff = np.abs(c[:, None] - c[None, :])
    return (diff >= pq.q) & (diff <= pq.p - pq.q)


def _compat_masks(pq: PQParams) -> list[int]:
    masks = []
    for a in range(pq.p):
        m = 0
        for b in range(pq.p):
            if pq.ok(a, b):
                m |= 1 << b
        masks.append(m)
    return masks


def _check_partial(g: Graph, pq: PQParams, partial: Optional[Mapping[int, int]]) -> dict:
    partial = dict(partial or {})
    for v, c in partial.items():
        if not 0 <= v < g.n:
            raise InvalidPrecoloring(f"{v} is not a vertex")
        if not 0 <= c < pq.p:
            raise InvalidPrecoloring(f"color {c} of vertex {v} is outside 0..{pq.p - 1}")
    return partial


def is_pq_colorable(g: Union[Graph, RootedPartialKTree], pq: PQParams,
                    partial: Optional[Mapping[int, int]] = None,
                    state_limit: int = STATE_LIMIT) -> Optional[CircularColoring]:
    """A (p,q)-coloring extending ``partial``, or ``None`` if none exists.

    Passing a certified :class:`RootedPartialKTree` switches to bag-tree
    dynamic programming.
    """
    if isinstance(g, RootedPartialKTree):
        t = g
        partial = _check_partial(t.graph, pq, partial)
        if t.certified:
            return _dp_coloring(t, pq, partial, state_limit)
        g = t.graph
    partial = _check_partial(g, pq, partial)
    colors = _backtrack(g, pq, partial)
    return None if colors is None else CircularColoring(tuple(colors))


# -- backtracking ------------------------------------------------------------

def _backtrack(g: Graph, pq: PQParams, partial: dict) -> Optional[list]:
    full = (1 << pq.p) - 1
    compat = _compat_masks(pq)
    colors = [-1] * g.n
    for comp in g.components():
        domains = {v: full for v in comp}
        fixed = [v for v in comp if v in partial]
        for v in fixed:
            domains[v] = 1 << partial[v]
        if not fixed:
            # colorings are invariant under rotation, so pin one vertex
            domains[comp[0]] = 1
        for v in fixed:
            for w in g.adj[v]:
                domains[w] &= compat[partial[v]]
        if any(d == 0 for d in domains.values()):
            return None
        result = _search(g, domains, compat, {})
        if result is None:
            return None
        for v, c in result.items():
            colors[v] = c
    return colors


def _search(g, domains, compat, assigned):
    if len(assigned) == len(domains):
        return dict(assigned)
    v = min((u for u in domains if u not in assigned),
            key=lambda u: (bin(domains[u]).count("1"), -len(g.adj[u]), u))
    dom = domains[v]
    while dom:
        low = dom & -dom
        dom ^= low
        c = low.bit_length() - 1
        changed = []
        dead = False
        for w in g.adj[v]:
            if w in assigned:
                continue
            nd = domains[w] & compat[c]
            if nd != domains[w]:
                changed.append((w, domains[w]))
                domains[w] = nd
                if nd == 0:
                    dead = True
                    break
        if not dead:
            assigned[v] = c
            saved = domains[v]
            domains[v] = low
            out = _search(g, domains, compat, assigned)
            domains[v] = saved
            del assigned[v]
            if out is not None:
                for w, d in changed:
                    domains[w] = d
                return out
        for w, d in changed:
            domains[w] = d
    return None


# -- bag-tree dynamic programming -------------------------------------------

def _broadcast(msg, msg_axes, target_axes, p):
    perm = [msg_axes.index(x) for x in target_axes if x in msg_axes]
    shape = [p if x in msg_axes else 1 for x in target_axes]
    return np.transpose(msg, perm).reshape(shape)


def bag_tables(t: RootedPartialKTree, pq: PQParams, partial: Optional[Mapping[int, int]] = None,
               state_limit: int = STATE_LIMIT):
    """Satisfiability table for every bag, children folded in.

    Table ``i`` is a boolean array with one axis per vertex of bag ``i`` (in
    bag order). Entry ``[c_0, ..., c_k]`` is true iff that bag coloring extends
    to every vertex introduced below the bag. Table 0 has one axis per root.
    """
    p = pq.p
    width = t.k + 1
    if p ** width > state_limit:
        raise BudgetExhausted(f"p^(k+1) = {p ** width} exceeds the state limit {state_limit}")
    partial = dict(partial or {})
    compat = compat_matrix(pq)
    bags, parent = bag_tree(t)
    g = t.graph

    def domain_axis(v, axes):
        d = np.zeros(p, dtype=bool)
        if v in partial:
            d[partial[v]] = True
        else:
            d[:] = True
        shape = [p if x == v else 1 for x in axes]
        return d.reshape(shape)

    def edge_axis(u, v, axes):
        i, j = axes.index(u), axes.index(v)
        shape = [1] * len(axes)
        shape[i] = shape[j] = p
        m = compat if i < j else compat.T
        return m.reshape(shape)

    tables = []
    for i, bag in enumerate(bags):
        axes = list(bag)
        table = np.ones((p,) * width, dtype=bool)
        if i == 0:
            for v in bag:
                table = table & domain_axis(v, axes)
            for a in range(width):
                for b in range(a + 1, width):
                    if g.has_edge(bag[a], bag[b]):
                        table = table & edge_axis(bag[a], bag[b], axes)
        else:
            v = bag[-1]
            table = table & domain_axis(v, axes)
            for c in bag[:-1]:
                if g.has_edge(v, c):
                    table = table & edge_axis(v, c, axes)
        tables.append(table)

    for i in range(len(bags) - 1, 0, -1):
        msg = tables[i].any(axis=width - 1)
        clique = list(bags[i][:-1])
        par = parent[i]
        tables[par] = tables[par] & _broadcast(msg, clique, list(bags[par]), p)
    return bags, parent, tables


def _dp_coloring(t, pq, partial, state_limit):
    bags, parent, tables = bag_tables(t, pq, partial, state_limit)
    root = tables[0]
    if not root.any():
        return None
    colors = [-1] * t.n
    first = np.argwhere(root)[0]
    for v, c in zip(bags[0], first):
        colors[v] = int(c)
    for i in range(1, len(bags)):
        bag = bags[i]
        idx = tuple(colors[c] for c in bag[:-1])
        options = np.flatnonzero(tables[i][idx])
        colors[bag[-1]] = int(options[0])
    return CircularColoring(tuple(colors))


# -- circular chromatic number ----------------------------------------------

def candidate_fractions(n: int) -> list[Fraction]:
    """Reduced fractions a/b > 2 with a <= n, in increasing order."""
    out = set()
    for a in range(3, n + 1):
        for b in range(1, (a + 1) // 2):
            if gcd(a, b) == 1:
                out.add(Fraction(a, b))
    return sorted(out)


def circular_chromatic_number(g: Graph) -> Fraction:
    """Smallest p/q with a (p,q)-coloring.

    Edgeless graphs get 1 by convention, bipartite graphs with an edge get 2.
    Otherwise the minimum is attained with ``p <= |V|``, so the search scans
    reduced fractions in that range in increasing order.
    """
    if g.m == 0:
        return Fraction(1)
    if is_bipartite(g):
        return Fraction(2)
    for frac in candidate_fractions(g.n):
        pq = PQParams(frac.numerator, frac.denominator)
        if is_pq_colorable(g, pq) is not None:
            return frac
    raise AssertionError("K_n coloring must succeed at p/q = n")


# -- odd-cycle homomorphism (independent cross-check) ------------------------

def hom_to_odd_cycle(g: Graph, t: int) -> bool:
    """Whether ``g`` maps homomorphically onto the cycle of length ``2t + 1``."""
    return odd_cycle_map(g, t) is not None


def odd_cycle_map(g: Graph, t: int) -> Optional[list]:
    """A homomorphism to the cycle of length ``2t + 1`` as a list of positions, or ``None``.

    Plain backtracking on cycle positions, sharing no code with the
    (p,q)-coloring engines so it can serve as a cross-check.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    size = 2 * t + 1
    order, starts = [], set()
    seen = set()
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        starts.add(s)
        queue = [s]
        for u in queue:
            order.append(u)
            for w in sorted(g.adj[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    image = {}

    def place(i):
        if i == len(order):
            return True
        v = order[i]
        # the target cycle is vertex-transitive: a component's first vertex may sit at 0
        candidates = (0,) if v in starts else range(size)
        for x in candidates:
            if all((image[w] - x) % size in (1, size - 1) for w in g.adj[v] if w in image):
                image[v] = x
                if place(i + 1):
                    return True
                del image[v]
        return False

    if not place(0):
        return None
    return [image[v] for v in range(g.n)]


# -- chromatic number --------------------------------------------------------

CHROMATIC_CAP = 14


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by DSATUR branch-and-bound (at most 14 vertices)."""
    if g.n > CHROMATIC_CAP:
        raise TooLarge(f"chromatic_number is capped at {CHROMATIC_CAP} vertices")
    if g.n == 0:
        return 0
    best = [g.n]
    color = [-1] * g.n

    def rec(used, count):
        if count == g.n:
            best[0] = min(best[0], used)
            return
        if used >= best[0]:
            return
        # DSATUR: most distinct neighbor colors, then highest degree
        v = max((u for u in range(g.n) if color[u] == -1),
                key=lambda u: (len({color[w] for w in g.adj[u] if color[w] != -1}), len(g.adj[u]), -u))
        taken = {color[w] for w in g.adj[v]}
        for c in range(used + 1):
            if c in taken or max(used, c + 1) >= best[0]:
                continue
            color[v] = c
            rec(max(used, c + 1), count + 1)
            color[v] = -1

    rec(0, 0)
    return best[0]
