"""Odd-girth against (5,2)-colorability over all small partial 2-trees.

Every connected graph of tree-width at most 2 up to the vertex cap is checked.
The empirical threshold is one more than the largest odd-girth among the
graphs that fail.
"""

import sys

from circtw import ExperimentConfig, run_verify_theorem
from circtw.experiment import report_to_json

cap = int(sys.argv[1]) if len(sys.argv) > 1 else 8
report = run_verify_theorem(ExperimentConfig(2, 5, 2, exhaustive_vertex_cap=cap))
summary = report_to_json(report)["summary"]
print(f"vertex cap {cap}: {summary['graphs']} graphs, {summary['bipartite']} bipartite, "
      f"{summary['failures']} not (5,2)-colorable")
print("odd-girths of failures:", summary["failure_odd_girths"], "-> g_hat =", report.g_hat)
print(f"runtime {report.runtime:.1f}s")
