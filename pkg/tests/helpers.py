"""Shared strategies and brute-force oracles for the test suite."""

from itertools import combinations, product

import networkx as nx
from hypothesis import strategies as st

from circtw.graph import INF, Graph
from circtw.treewidth import random_bipartite_partial_k_tree, random_partial_k_tree


@st.composite
def graphs(draw, max_n=8, min_n=1):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, keep) if b])


@st.composite
def partial_k_trees(draw, ks=(1, 2), max_n=12):
    k = draw(st.sampled_from(ks))
    n = draw(st.integers(k + 1, max_n))
    keep = draw(st.sampled_from((0.4, 0.7, 1.0)))
    seed = draw(st.integers(0, 2 ** 32))
    return random_partial_k_tree(k, n, keep, seed=seed)


@st.composite
def bipartite_trees(draw, ks=(1, 2), max_n=12):
    k = draw(st.sampled_from(ks))
    n = draw(st.integers(k + 1, max_n))
    keep = draw(st.sampled_from((0.4, 0.7, 1.0)))
    seed = draw(st.integers(0, 2 ** 32))
    return random_bipartite_partial_k_tree(k, n, keep, seed=seed)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def brute_odd_girth(g: Graph):
    """Shortest odd closed walk through the bipartite double cover (equals the odd girth)."""
    cover = nx.Graph()
    for u, v in g.edges:
        cover.add_edge((u, 0), (v, 1))
        cover.add_edge((u, 1), (v, 0))
    best = INF
    for v in range(g.n):
        if (v, 0) in cover and (v, 1) in cover:
            try:
                best = min(best, nx.shortest_path_length(cover, (v, 0), (v, 1)))
            except nx.NetworkXNoPath:
                pass
    return best


def brute_pq_colorable(g: Graph, p: int, q: int, fixed=None) -> bool:
    """Every assignment of colors, checked edge by edge."""
    fixed = fixed or {}
    free = [v for v in range(g.n) if v not in fixed]
    for colors in product(range(p), repeat=len(free)):
        c = dict(fixed)
        c.update(zip(free, colors))
        if all(q <= abs(c[u] - c[v]) <= p - q for u, v in g.edges):
            return True
    return False
