"""Gadget tables, one replacement step, and the explicit bound.

For every small bipartite type the gadget table holds a graph whose F-set is
as small as the search could make it. Swapping a small piece of a graph for
the matching gadget keeps it non-colorable while making it smaller.
"""

import time

from circtw import PQParams, girth_bound, proof_step, synthesize_gadgets
from circtw.gadgets import spot_check
from circtw.graph import Graph
from circtw.treewidth import RootedPartialKTree

pq = PQParams(5, 2)

start = time.perf_counter()
table = synthesize_gadgets(1, pq, d=1, type_bound=4, search_budget=60, vertex_cap=8)
print(f"k=1 table built in {time.perf_counter() - start:.1f}s")
for g in table.entries:
    print(f"  type {g.type.pairs()}: order {g.order}, |F| = {len(g.fset)}, {g.status}")
print("spot check:", spot_check(table, samples=10).ok)

# A triangle with a long tail is not (5,2)-colorable. Its tail can be cut off
# and replaced by a gadget; with k=2 the step goes through.
table2 = synthesize_gadgets(2, pq, d=2, type_bound=2, search_budget=60, vertex_cap=6)
n = 30
edges = [(0, 1), (0, 2), (1, 2)] + [(v - 1, v) for v in range(3, n)]
cert = tuple((v, (v - 1, v - 2)) for v in range(3, n))
t = RootedPartialKTree(Graph.from_edges(n, edges), 2, (0, 1, 2), cert)
step = proof_step(t, pq, 6, table2, enforce_girth=False)
print(f"proof step: {t.n} -> {step.tree.n} vertices, odd girth {step.odd_girth_before} -> {step.odd_girth_after}")

b = girth_bound(1, 3, 1)
print(f"odd-girth bound for k=1, p=3, d=1: {b.coefficient}*2^{b.exponent}, {b.digits} digits")
big = girth_bound(1, 5, 3)
print(f"for k=1, p=5, d=3 the exponent alone is {big.exponent} ({big.digits} digits in the bound)")
