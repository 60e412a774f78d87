"""Root distance types, precoloring sets and the type reduction.

A rooted graph remembers k+1 root vertices. Its type is the matrix of root
distances; its F-set is the set of root colorings that extend to the whole
graph. Reducing a bipartite rooted graph shrinks far-apart distances while
keeping every extendable root coloring extendable.
"""

from circtw import PQParams, ReductionParams, f_set, reduce_type, type_of, verify_f_inclusion
from circtw.corpus import path_probe_corpus, structured_corpus
from circtw.graph import Graph, path_graph
from circtw.precolor import probe_extension_distance, spread
from circtw.treewidth import RootedPartialKTree, certify

pq = PQParams(5, 2)

# Walking along a path, the reachable colors spread until they cover everything.
for length in range(1, 5):
    print(f"spread after {length} step(s) from 0:", sorted(spread(pq, 0, length)))

# Adjacent roots allow exactly the 10 compatible pairs; distance 2 allows 15.
edge = RootedPartialKTree(path_graph(2), 1, (0, 1), ())
two = RootedPartialKTree(path_graph(3), 1, (0, 2), None)
print("edge F-set size:", len(f_set(edge, pq)), "| 2-path F-set size:", len(f_set(two, pq)))

# How far apart must precolored vertices be before any precoloring extends?
print("extension distance on paths:", probe_extension_distance(pq, path_probe_corpus(12)).d)
corpus = structured_corpus(18)
probe = probe_extension_distance(pq, [item.probe() for item in corpus])
print(f"extension distance on {len(corpus)} structured graphs:", probe.d, "witness:", probe.witness.name)

# A hanging path behind one root gets contracted away without changing the type.
edges = [(0, 1)] + list(zip([0] + list(range(2, 14)), range(2, 14)))
t = certify(Graph.from_edges(14, edges), (0, 1), 1)
out, trace = reduce_type(t, ReductionParams(5, 2, 1))
print(f"reduction: {t.n} -> {out.n} vertices, type {type_of(t).pairs()} -> {type_of(out).pairs()}")
print("F-set inclusion holds:", verify_f_inclusion(t, out, pq).holds)
