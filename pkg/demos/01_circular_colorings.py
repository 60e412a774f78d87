"""Circular colorings on small graphs.

A (p,q)-coloring puts colors 0..p-1 on a circle and asks that neighbours sit
at circular distance at least q. The smallest p/q that works is the circular
chromatic number; rounding it up gives the ordinary chromatic number.
"""

from circtw import PQParams, chromatic_number, circular_chromatic_number, cycle_graph, complete_graph
from circtw.circular import hom_to_odd_cycle, is_pq_colorable
from circtw.graph import petersen_graph

# Odd cycles sit strictly between 2 and 3.
for n in (3, 5, 7, 9):
    print(f"C{n}: chi_c = {circular_chromatic_number(cycle_graph(n))}")

# Cliques are integral.
for n in (2, 3, 4, 5):
    print(f"K{n}: chi_c = {circular_chromatic_number(complete_graph(n))}")

# Petersen has chromatic number 3 and circular chromatic number 3 too.
pet = petersen_graph()
print("Petersen:", circular_chromatic_number(pet), "chi =", chromatic_number(pet))

# A (5,2)-coloring of C5 is a homomorphism onto C5 itself.
col = is_pq_colorable(cycle_graph(5), PQParams(5, 2))
print("C5 (5,2)-coloring:", [col[v] for v in range(5)])

# For ratios (2t+1)/t the two views agree: colorable iff it maps onto C_{2t+1}.
for t in (1, 2, 3):
    g = cycle_graph(2 * t + 3)
    print(f"C{g.n} -> C{2 * t + 1}:", hom_to_odd_cycle(g, t),
          "| (p,q)-colorable:", is_pq_colorable(g, PQParams(2 * t + 1, t)) is not None)
