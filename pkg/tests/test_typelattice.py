import json
import random
from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from circtw.errors import BudgetExhausted, KMismatch, LemmaViolation, PreconditionFailed
from circtw.graph import INF, path_graph
from circtw.treewidth import RootedPartialKTree, glue_with_maps, isolated_roots
from circtw.typelattice import (
    TypeMatrix, check_glue_type, compatible, enumerate_bipartite_types, glue_type_suite, is_bipartite_type,
    leq, random_glue_instance, side_type, type_of,
)
from helpers import bipartite_trees, to_nx


def test_validation():
    TypeMatrix.from_pairs(1, [3])
    with pytest.raises(ValueError):
        TypeMatrix(1, ((0, 1), (2, 0)))
    with pytest.raises(ValueError):
        TypeMatrix(1, ((1, 1), (1, 0)))
    with pytest.raises(ValueError):
        TypeMatrix.from_pairs(1, [0])
    with pytest.raises(ValueError):
        TypeMatrix.from_pairs(2, [1, 5, 1])  # 5 > 1 + 1
    with pytest.raises(ValueError):
        TypeMatrix(2, ((0, 1), (1, 0)))


def test_infinity_rules():
    m = TypeMatrix.from_pairs(2, [1, INF, INF])
    assert m[0, 2] == INF and m.finite_max() == 1
    assert TypeMatrix.all_infinite(2).finite_max() is None
    assert str(TypeMatrix.from_pairs(1, [None])) == "0 inf\ninf 0"


def test_json_round_trip():
    m = TypeMatrix.from_pairs(2, [2, INF, INF])
    text = json.dumps(m.to_json())
    assert "null" in text and TypeMatrix.from_json(json.loads(text)) == m


def test_type_of_examples():
    t = RootedPartialKTree(path_graph(4), 1, (0, 3), None)
    assert type_of(t).pairs() == [3]
    assert type_of(isolated_roots(2)) == TypeMatrix.all_infinite(2)


def test_order_relations():
    a, b, c = (TypeMatrix.from_pairs(1, [x]) for x in (1, 3, 2))
    inf = TypeMatrix.all_infinite(1)
    assert leq(a, b) and not leq(b, a) and not leq(a, c) and not compatible(a, c)
    assert leq(a, inf) and leq(c, inf) and compatible(a, inf)
    with pytest.raises(KMismatch):
        leq(a, TypeMatrix.all_infinite(2))


def test_bipartite_type():
    assert is_bipartite_type(TypeMatrix.from_pairs(2, [1, 1, 2]))
    assert not is_bipartite_type(TypeMatrix.from_pairs(2, [1, 1, 1]))
    assert is_bipartite_type(TypeMatrix.from_pairs(2, [1, INF, INF]))


def brute_type_count(k, bound):
    values = list(range(1, bound + 1)) + [INF]
    count = 0
    size = k + 1
    for vals in product(values, repeat=k * (k + 1) // 2):
        d = {}
        for (i, j), x in zip(combinations(range(size), 2), vals):
            d[i, j] = d[j, i] = x
        for i in range(size):
            d[i, i] = 0
        tri = all(d[i, l] <= d[i, j] + d[j, l] for i in range(size) for j in range(size) for l in range(size))
        par = all(not (d[i, j] + d[j, l] + d[i, l] < INF and (d[i, j] + d[j, l] + d[i, l]) % 2)
                  for i, j, l in combinations(range(size), 3))
        count += tri and par
    return count


@pytest.mark.parametrize("k, bound, expected", [(1, 2, 3), (1, 1, 2), (2, 1, 4), (2, 6, 106), (1, 6, 7)])
def test_enumeration_counts(k, bound, expected):
    types = enumerate_bipartite_types(k, bound)
    assert len(types) == expected == brute_type_count(k, bound)
    assert len(set(types)) == len(types) and types[-1] == TypeMatrix.all_infinite(k)


def test_enumeration_budget():
    with pytest.raises(BudgetExhausted):
        enumerate_bipartite_types(3, 10, limit=1000)


def test_side_type():
    assert side_type([0, 1, 0]).pairs() == [1, 2, 1]


def path_split_oracle(a, b, m0):
    """Shortest root paths of a ⊕ b, cut at roots, each piece no shorter than m0 and of its parity."""
    glued, ma, mb = glue_with_maps(a, b)
    h = to_nx(glued.graph)
    edges_a = {frozenset((ma[u], ma[v])) for u, v in a.graph.edges}
    edges_b = {frozenset((mb[u], mb[v])) for u, v in b.graph.edges}
    roots = glued.roots
    index = {r: i for i, r in enumerate(roots)}
    for i, j in combinations(range(len(roots)), 2):
        try:
            path = nx.shortest_path(h, roots[i], roots[j])
        except nx.NetworkXNoPath:
            continue
        cuts = [pos for pos, v in enumerate(path) if v in index]
        for s, e in zip(cuts, cuts[1:]):
            piece = [frozenset(x) for x in zip(path[s:e], path[s + 1:e + 1])]
            assert all(x in edges_a for x in piece) or all(x in edges_b for x in piece)
            bound = m0[index[path[s]], index[path[e]]]
            assert len(piece) >= bound and (len(piece) - bound) % 2 == 0
        total = len(path) - 1
        assert total >= m0[i, j] and (total - m0[i, j]) % 2 == 0


@given(st.integers(0, 2 ** 32), st.sampled_from((1, 2, 3)))
def test_glue_invariant_with_path_oracle(seed, k):
    a, b, m0 = random_glue_instance(k, random.Random(seed), max_vertices=14)
    report = check_glue_type(a, b, m0)
    assert report.ok and leq(m0, report.type_glued)
    path_split_oracle(a, b, m0)


def test_glue_preconditions():
    a = RootedPartialKTree(path_graph(2), 1, (0, 1), ())
    with pytest.raises(PreconditionFailed):
        check_glue_type(a, a, TypeMatrix.from_pairs(1, [3]))
    with pytest.raises(PreconditionFailed):
        check_glue_type(a, a, TypeMatrix.from_pairs(2, [1, 1, 1]))


def test_suite_runs_clean():
    r = glue_type_suite(60, seed=3)
    assert r.ok and r.instances == 60


def test_violation_carries_dump():
    exc = LemmaViolation("x", dump={"a": 1})
    assert exc.dump == {"a": 1}
