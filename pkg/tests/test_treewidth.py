import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from circtw.errors import BudgetExhausted, KMismatch, TooSmall
from circtw.graph import INF, Graph, canonical_form, cycle_graph, is_bipartite, path_graph
from circtw.treewidth import (
    RootedPartialKTree, as_rooted, bag_tree, certify, glue, glue_all, glue_with_maps, isolated_roots,
    ktree_edges, random_bipartite_partial_k_tree, random_ktree, random_partial_k_tree, rooted, split,
    split_with_maps, validate,
)
from helpers import bipartite_trees, partial_k_trees, to_nx


def test_frozen_random_instance():
    # regression snapshot: the generator must stay reproducible across versions
    t = random_partial_k_tree(2, 8, 0.5, seed=42)
    assert t.graph.sorted_edges() == [(0, 2), (0, 6), (1, 2), (2, 3), (2, 4), (2, 5)]
    assert t.certificate == ((3, (1, 2)), (4, (2, 3)), (5, (1, 2)), (6, (0, 1)), (7, (1, 6)))


@given(partial_k_trees(ks=(1, 2, 3)))
def test_random_trees_validate(t):
    assert validate(t) is None
    assert t.graph.edges <= ktree_edges(t)


@given(bipartite_trees(ks=(1, 2, 3), max_n=30))
def test_bipartite_generator(t):
    assert validate(t) is None and is_bipartite(t.graph)


def test_random_ktree_is_a_ktree():
    rng = random.Random(3)
    for k in (1, 2, 3):
        edges, cert = random_ktree(k, 12, rng)
        assert len(edges) == k * (k + 1) // 2 + k * (12 - k - 1)
        h = nx.Graph(list(edges))
        assert nx.is_chordal(h) and max(len(c) for c in nx.find_cliques(h)) == k + 1


def test_min_odd_girth_and_budget():
    t = random_partial_k_tree(2, 10, 0.8, min_odd_girth=5, seed=1)
    from circtw.graph import odd_girth
    assert odd_girth(t.graph) >= 5
    with pytest.raises(BudgetExhausted):
        random_partial_k_tree(2, 12, 1.0, min_odd_girth=INF, seed=0, max_rejections=5)


def test_validate_messages():
    g = path_graph(3)
    assert validate(RootedPartialKTree(g, 1, (0, 1), ((2, (1,)),))) is None
    assert "no certificate" in validate(RootedPartialKTree(g, 1, (0, 2), None))
    assert "absent" in validate(RootedPartialKTree(g, 1, (0, 2), ((1, (2,)),)))
    assert "introduced twice" in validate(RootedPartialKTree(g, 1, (0, 1), ((1, (0,)),)))
    assert "never introduced" in validate(RootedPartialKTree(g, 1, (0, 1), ()))
    assert "expected 2 roots" in validate(RootedPartialKTree(g, 1, (0,), ()))


def test_bag_tree_shape():
    t = random_partial_k_tree(2, 9, 0.7, seed=5)
    bags, parent = bag_tree(t)
    assert bags[0] == t.roots and parent[0] == -1
    for i in range(1, len(bags)):
        assert 0 <= parent[i] < i
        assert set(bags[i][:-1]) <= set(bags[parent[i]])


@given(bipartite_trees(max_n=10), bipartite_trees(max_n=10))
def test_glue_maps_and_certificate(a, b):
    if a.k != b.k:
        with pytest.raises(KMismatch):
            glue(a, b)
        return
    g, ma, mb = glue_with_maps(a, b)
    assert g.n == a.n + b.n - (a.k + 1)
    assert validate(g) is None
    assert {(min(ma[u], ma[v]), max(ma[u], ma[v])) for u, v in a.graph.edges} <= g.graph.edges
    assert {(min(mb[u], mb[v]), max(mb[u], mb[v])) for u, v in b.graph.edges} <= g.graph.edges
    assert all(mb[r] == ra for r, ra in zip(b.roots, a.roots))


def test_glue_all_and_isolated_identity():
    e = RootedPartialKTree(path_graph(2), 1, (0, 1), ())
    assert glue(isolated_roots(1), e).graph == e.graph
    assert glue_all([e, e, e]).graph == e.graph


def test_uncertified_glue_stays_uncertified():
    a = RootedPartialKTree(path_graph(3), 1, (0, 2), None)
    assert glue(a, isolated_roots(1)).certificate is None


@given(st.integers(1, 3), st.integers(2, 6), st.integers(0, 10 ** 6), st.sampled_from((0.5, 1.0)))
def test_split_postconditions(k, n_factor, seed, keep):
    n = max(k + 1, n_factor)
    t = random_partial_k_tree(k, 3 * n + seed % 7, keep, seed=seed)
    g1, g2, first, second = split_with_maps(t, n)
    assert n + 1 <= g1.n <= 2 * n
    assert validate(g1) is None and validate(g2) is None
    assert first[:k + 1] == second[:k + 1]
    assert g1.n + g2.n - (k + 1) == t.n
    # glue maps back onto the original edge set
    glued, m1, m2 = glue_with_maps(g1, g2)
    back = {}
    for v, w in m1.items():
        back[w] = first[v]
    for v, w in m2.items():
        back[w] = second[v]
    assert {tuple(sorted((back[u], back[v]))) for u, v in glued.graph.edges} == t.graph.edges


def test_split_errors():
    t = random_partial_k_tree(2, 10, 1.0, seed=0)
    with pytest.raises(TooSmall):
        split(t, 4)
    with pytest.raises(ValueError):
        split(t, 2)
    with pytest.raises(ValueError):
        split(RootedPartialKTree(t.graph, 2, t.roots, None), 3)


def is_path_like(g):
    return g.m == g.n - 1 and max(g.degree(v) for v in range(g.n)) <= 2 and nx.is_connected(to_nx(g))


def test_split_small_example():
    # path 0..8 as a rooted partial 1-tree; n = 3 gives a piece with 4..6 vertices
    t = RootedPartialKTree(path_graph(9), 1, (0, 1), tuple((v, (v - 1,)) for v in range(2, 9)))
    g1, g2 = split(t, 3)
    assert 4 <= g1.n <= 6 and g1.n + g2.n - 2 == 9


def test_split_ten_vertex_path():
    t = RootedPartialKTree(path_graph(10), 1, (0, 1), tuple((v, (v - 1,)) for v in range(2, 10)))
    g1, g2 = split(t, 3)
    assert g1.n == 6 and is_path_like(g1.graph)
    assert canonical_form(glue(g1, g2).graph) == canonical_form(path_graph(10))


@given(partial_k_trees(ks=(1, 2), max_n=9))
def test_certify_agrees_with_given_certificate(t):
    c = certify(t.graph, t.roots, t.k)
    assert c is not None and validate(c) is None


def test_certify_rejections():
    c4 = cycle_graph(4)
    assert certify(c4, (0, 1), 1) is None  # a cycle is not a forest
    assert certify(path_graph(3), (0, 2), 1) is None  # roots far apart in one tree
    assert certify(path_graph(3), (0, 1), 1) is not None
    assert certify(c4, (0, 1, 2), 2) is not None
    k4 = Graph.from_edges(5, list(combinations(range(4), 2)))
    assert certify(k4, (0, 1, 4), 2) is None
    with pytest.raises(ValueError):
        certify(c4, (0, 1, 2), 1)


def test_certify_k1_matches_forest_rule():
    rng = random.Random(1)
    for _ in range(400):
        n = rng.randint(2, 8)
        es = [e for e in combinations(range(n), 2) if rng.random() < 0.3]
        g = Graph.from_edges(n, es)
        roots = tuple(rng.sample(range(n), 2))
        h = to_nx(g)
        expect = nx.is_forest(h) and (g.has_edge(*roots) or not nx.has_path(h, *roots))
        t = certify(g, roots, 1)
        assert (t is not None) == expect
        if t is not None:
            assert validate(t) is None


def test_as_rooted():
    t = random_partial_k_tree(2, 9, 1.0, seed=7)
    bags, _ = bag_tree(t)
    r = as_rooted(t, bags[4])
    assert validate(r) is None and set(r.roots) == set(bags[4])
    with pytest.raises(ValueError):
        as_rooted(t, (0, 1, 8) if set(bags[0]) != {0, 1, 8} else (2, 3, 4))


def test_rooted_shorthand():
    t = rooted(path_graph(2), (0, 1), ())
    assert t.k == 1 and t.certified
