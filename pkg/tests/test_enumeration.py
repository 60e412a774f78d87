import time
from collections import Counter
from itertools import combinations

import networkx as nx
import pytest

from circtw.enumeration import grow_connected, grow_rooted, nauty_key, treewidth_at_most
from circtw.graph import Graph, complete_graph, cycle_graph, is_bipartite, path_graph
from circtw.treewidth import certify, validate
from helpers import to_nx


def test_connected_counts():
    # connected graphs of tree-width at most 2, by order
    counts = Counter(g.n for g in grow_connected(2, 8))
    assert [counts[n] for n in range(1, 9)] == [1, 1, 2, 5, 15, 56, 241, 1245]


def test_connected_trees_match_networkx():
    counts = Counter(g.n for g in grow_connected(1, 9))
    assert [counts[n] for n in range(1, 10)] == [sum(1 for _ in nx.nonisomorphic_trees(n)) if n > 1 else 1
                                                 for n in range(1, 10)]


def test_connected_outputs_are_distinct_and_valid():
    graphs = list(grow_connected(2, 7))
    keys = {nauty_key(g) for g in graphs}
    assert len(keys) == len(graphs)
    assert all(nx.is_connected(to_nx(g)) and treewidth_at_most(g, 2) for g in graphs)


def brute_rooted_count(k, n, bipartite=True):
    """Rooted graphs on n vertices with roots 0..k, certified and root-connected, up to rooted isomorphism."""
    seen = set()
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
        if bipartite and not is_bipartite(g):
            continue
        comps = g.components()
        if any(not set(c) & set(range(k + 1)) for c in comps):
            continue
        if certify(g, tuple(range(k + 1)), k) is None:
            continue
        seen.add(nauty_key(g, tuple(range(k + 1))))
    return len(seen)


@pytest.mark.parametrize("k, n", [(1, 4), (1, 5), (2, 4), (2, 5)])
def test_rooted_counts_match_brute_force(k, n):
    got = sum(1 for t in grow_rooted(k, n) if t.n == n)
    assert got == brute_rooted_count(k, n)


def test_rooted_outputs_validate():
    for t in grow_rooted(2, 6):
        assert validate(t) is None and is_bipartite(t.graph)


def test_rooted_pruning_matches_full_traversal():
    full = Counter()
    for t in grow_rooted(1, 7, root_connected=False):
        if all(set(c) & {0, 1} for c in t.graph.components()):
            full[t.n] += 1
    pruned = Counter(t.n for t in grow_rooted(1, 7))
    assert full == pruned


def test_forest_universe():
    counts = Counter(t.n for t in grow_rooted(1, 6, root_clique=False))
    assert [counts[n] for n in range(2, 7)] == [2, 5, 14, 38, 105]
    assert any(not t.certified for t in grow_rooted(1, 4, root_clique=False))
    with pytest.raises(ValueError):
        next(grow_rooted(2, 4, root_clique=False))


def test_status_and_deadline():
    status = {}
    list(grow_rooted(1, 5, status=status))
    assert status["complete"]
    status = {}
    list(grow_rooted(2, 9, deadline=time.monotonic() - 1, status=status))
    assert not status["complete"]


def test_treewidth_at_most():
    assert treewidth_at_most(cycle_graph(6), 2) and not treewidth_at_most(cycle_graph(6), 1)
    assert not treewidth_at_most(complete_graph(4), 2) and treewidth_at_most(complete_graph(4), 3)
    assert treewidth_at_most(path_graph(5), 1)
    assert not treewidth_at_most(complete_graph(5), 3)


def test_nauty_key_respects_roots():
    p = path_graph(3)
    assert nauty_key(p, (0, 1)) == nauty_key(Graph.from_edges(3, [(1, 0), (0, 2)]), (1, 0))
    assert nauty_key(p, (0, 1)) != nauty_key(p, (1, 0))
