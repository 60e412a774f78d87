import itertools

import networkx as nx
import pytest
from hypothesis import given

from circtw.errors import TooLarge
from circtw.graph import (
    INF, Bipartition, Graph, OddCycleWitness, bipartition, canonical_form, complete_graph,
    contract_closed_neighborhood, cycle_graph, disjoint_union, distances, empty_graph, is_bipartite,
    odd_girth, path_graph, petersen_graph,
)
from helpers import brute_odd_girth, graphs, to_nx


def test_edges_are_normalized_and_validated():
    g = Graph.from_edges(3, [(2, 0), (0, 2), (1, 2)])
    assert g.edges == {(0, 2), (1, 2)}
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_edge_code_round_trip():
    for g in (petersen_graph(), cycle_graph(7), empty_graph(3), path_graph(1)):
        assert Graph.from_code(g.n, g.code()) == g
    with pytest.raises(ValueError):
        Graph.from_code(2, 1 << 5)


@pytest.mark.parametrize("g, expected", [
    (cycle_graph(5), 5), (cycle_graph(6), INF), (complete_graph(4), 3), (petersen_graph(), 5),
    (empty_graph(4), INF), (cycle_graph(9), 9),
])
def test_odd_girth_examples(g, expected):
    assert odd_girth(g) == expected


@given(graphs(max_n=9))
def test_odd_girth_matches_double_cover(g):
    assert odd_girth(g) == brute_odd_girth(g)


@given(graphs(max_n=9))
def test_bipartition_agrees_with_networkx(g):
    side = bipartition(g)
    assert isinstance(side, Bipartition) == nx.is_bipartite(to_nx(g))
    if isinstance(side, Bipartition):
        assert side.red | side.blue == set(range(g.n))
        assert all((u in side.red) != (v in side.red) for u, v in g.edges)
    else:
        assert isinstance(side, OddCycleWitness) and side.length % 2 == 1
        cyc = side.vertices
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_bipartition_is_deterministic():
    side = bipartition(path_graph(4))
    assert side.red == {0, 2} and side.blue == {1, 3}


@given(graphs(max_n=9))
def test_distances_match_networkx(g):
    h = to_nx(g)
    dist = distances(g, [0])
    lengths = nx.single_source_shortest_path_length(h, 0)
    assert dist == [lengths.get(v, INF) for v in range(g.n)]


def test_multi_source_distances():
    assert distances(path_graph(5), [0, 4]) == [0, 1, 2, 1, 0]
    with pytest.raises(ValueError):
        distances(path_graph(2), [3])


def test_contract_closed_neighborhood():
    g, mapping = contract_closed_neighborhood(path_graph(5), 2)
    assert g.n == 3
    assert mapping == {0: 0, 4: 1, 1: 2, 2: 2, 3: 2}
    assert g.edges == {(0, 2), (1, 2)}


def test_disjoint_union_offsets():
    g, offsets = disjoint_union([path_graph(2), cycle_graph(3)])
    assert offsets == [0, 2] and g.n == 5 and g.m == 4


def test_components_sorted():
    g = Graph.from_edges(5, [(3, 4), (0, 2)])
    assert g.components() == [[0, 2], [1], [3, 4]]


def test_induced():
    sub, index = petersen_graph().induced([0, 1, 2, 3, 4])
    assert sub == cycle_graph(5) and index[4] == 4


def test_canonical_form_c4_labelings():
    a = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    b = Graph.from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(a) != canonical_form(path_graph(4))


@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_form_matches_isomorphism(g, h):
    same = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert (canonical_form(g) == canonical_form(h)) == same


@given(graphs(max_n=8))
def test_canonical_form_invariant_under_relabeling(g):
    perm = list(range(g.n))[::-1]
    h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    assert canonical_form(g) == canonical_form(h)


def test_canonical_form_respects_colors():
    p = path_graph(3)
    assert canonical_form(p, [1, 0, 0]) == canonical_form(p, [0, 0, 1])
    assert canonical_form(p, [1, 0, 0]) != canonical_form(p, [0, 1, 0])


def test_canonical_form_cap():
    with pytest.raises(TooLarge):
        canonical_form(path_graph(13))
