"""Circular colorings of partial k-trees with large odd-girth.

Graphs and rooted partial k-trees, exact (p,q)-coloring, root precoloring
sets, root distance types and their reduction, gadget tables, the explicit
odd-girth bound, and a small-graph experiment harness.
"""

from .bound import BigBound, girth_bound, order_bound
from .circular import (
    CircularColoring, PQParams, chromatic_number, circular_chromatic_number, hom_to_odd_cycle,
    is_pq_colorable, odd_cycle_map,
)
from .errors import (
    BudgetExhausted, CirctwError, InvalidPrecoloring, KMismatch, LemmaViolation, NoStep, NotBipartite,
    ParseError, PreconditionFailed, TooLarge, TooSmall,
)
from .experiment import ExperimentConfig, ExperimentReport, emit_report, run_verify_theorem
from .formats import emit_graph, parse_graph_file, read_graph, write_graph
from .gadgets import Gadget, GadgetTable, spot_check, synthesize_gadgets
from .graph import INF, Graph, canonical_form, cycle_graph, complete_graph, is_bipartite, odd_girth, path_graph
from .precolor import FSet, Precoloring, extends, f_set, probe_extension_distance, spread
from .reduction import ReductionParams, reduce_type, verify_f_inclusion
from .theorem import ProofStep, proof_step
from .treewidth import RootedPartialKTree, certify, glue, random_partial_k_tree, split, validate
from .typelattice import TypeMatrix, leq, type_of

__version__ = "0.1.0"
