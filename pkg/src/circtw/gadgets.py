"""Gadget synthesis: one small bipartite rooted graph per bipartite type.

For a type ``M`` the gadget should have type ``M`` and an F-set contained in
the F-set of every bipartite rooted graph of type ``M``. It is assembled by
gluing, for each root precoloring that fails somewhere, the smallest graph
of type ``M`` on which it fails. When no failing precoloring is found (or no
graph of the type exists in the searched range) the gadget is the ``k+1``
isolated roots, whose F-set is everything.

The search is a bounded exhaustive enumeration, so minimality is only known
up to the vertex cap; each entry records whether the enumeration finished.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Optional

from .circular import PQParams
from .errors import LemmaViolation
from .formats import emit_graph, parse_graph_file
from .graph import is_bipartite
from .precolor import FSet, f_set
from .treewidth import RootedPartialKTree, glue_all, isolated_roots, random_bipartite_partial_k_tree
from .enumeration import grow_rooted
from .typelattice import TypeMatrix, enumerate_bipartite_types, type_of

EXHAUSTIVE = "exhaustive"
BUDGET_LIMITED = "budget-limited"
SCHEMA = "circtw.gadgets/1"


@dataclass(frozen=True)
class Gadget:
    type: TypeMatrix
    tree: RootedPartialKTree
    fset: FSet
    status: str
    realized: bool  # some searched graph had this type
    pieces: int = 0  # number of glued witnesses; 0 for the isolated gadget

    @property
    def order(self) -> int:
        return self.tree.n

    @property
    def isolated(self) -> bool:
        return self.pieces == 0


@dataclass(frozen=True)
class GadgetTable:
    k: int
    p: int
    q: int
    d: int
    type_bound: int
    search_budget: float
    vertex_cap: int
    universe: str
    entries: tuple
    graphs_searched: int = 0
    order_values: tuple = ()

    @property
    def pq(self) -> PQParams:
        return PQParams(self.p, self.q)

    @property
    def max_order(self) -> int:
        return max(g.order for g in self.entries)

    def lookup(self, m: TypeMatrix) -> Optional[Gadget]:
        return next((g for g in self.entries if g.type == m), None)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "k": self.k, "p": self.p, "q": self.q, "d": self.d,
            "type_bound": self.type_bound, "search_budget": self.search_budget,
            "vertex_cap": self.vertex_cap, "universe": self.universe,
            "graphs_searched": self.graphs_searched,
            "order_values": list(self.order_values),
            "entries": [
                {
                    "type": g.type.to_json(),
                    "graph": emit_graph(g.tree),
                    "fset": g.fset.to_hex(),
                    "status": g.status,
                    "realized": g.realized,
                    "pieces": g.pieces,
                }
                for g in self.entries
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GadgetTable":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported gadget table schema {data.get('schema')!r}")
        k, p = data["k"], data["p"]
        entries = tuple(
            Gadget(TypeMatrix.from_json(e["type"]), parse_graph_file(e["graph"]),
                   FSet.from_hex(k, p, e["fset"]), e["status"], e["realized"], e["pieces"])
            for e in data["entries"]
        )
        return cls(k, p, data["q"], data["d"], data["type_bound"], data["search_budget"], data["vertex_cap"],
                   data["universe"], entries, data["graphs_searched"], tuple(data["order_values"]))

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "GadgetTable":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


@dataclass
class _TypeState:
    killed: int = 0
    witnesses: list = field(default_factory=list)
    seen: int = 0


def synthesize_gadgets(k: int, pq: PQParams, d: int, type_bound: int, search_budget: float = 60.0,
                       vertex_cap: int = 10, universe: str = "auto") -> GadgetTable:
    """Build a gadget for every bipartite type with finite entries at most ``type_bound``.

    ``universe`` is ``"clique"`` (roots form a clique of the witnessing k-tree,
    the setting in which gadgets are substituted) or ``"forest"`` (k = 1
    only: any two roots of a forest). ``"auto"`` picks ``"forest"`` for k = 1.
    All types share one enumeration, bounded by ``vertex_cap`` vertices and
    ``search_budget`` seconds; running out of time marks every entry
    budget-limited instead of raising.
    """
    pq.require_above_two()
    if universe == "auto":
        universe = "forest" if k == 1 else "clique"
    if universe not in ("clique", "forest"):
        raise ValueError(f"unknown universe {universe!r}")
    types = enumerate_bipartite_types(k, type_bound)
    states = {m: _TypeState() for m in types}
    full = FSet.full(k, pq.p).bits

    # kill sets of earlier graphs, per type, for the order profile
    antichains: dict = {}
    order_values = set()

    status_box: dict = {}
    deadline = time.monotonic() + search_budget
    searched = 0
    for t in grow_rooted(k, vertex_cap, deadline=deadline, root_clique=(universe == "clique"), status=status_box):
        searched += 1
        m = type_of(t)
        kill = full & ~f_set(t, pq).bits
        earlier = antichains.setdefault(m, [])
        if all(kill & ~prev for _, prev in earlier):
            order_values.add(t.n)
            earlier.append((t.n, kill))
        st = states.get(m)
        if st is None:
            continue
        st.seen += 1
        new = kill & ~st.killed
        if new:
            st.killed |= new
            st.witnesses.append(t)
    status = EXHAUSTIVE if status_box.get("complete") else BUDGET_LIMITED

    entries = []
    for m in types:
        st = states[m]
        if not st.witnesses:
            entries.append(Gadget(m, isolated_roots(k), FSet.full(k, pq.p), status, st.seen > 0))
            continue
        gadget = glue_all(st.witnesses)
        got = type_of(gadget)
        if got != m:
            raise LemmaViolation(f"glued witnesses have type {got.entries}, expected {m.entries}",
                                 dump={"type": m, "witnesses": st.witnesses})
        fs = f_set(gadget, pq)
        if fs.bits != full & ~st.killed:
            raise LemmaViolation("F-set of the glued gadget is not the intersection of the witnesses",
                                 dump={"type": m, "witnesses": st.witnesses})
        entries.append(Gadget(m, gadget, fs, status, True, len(st.witnesses)))
    return GadgetTable(k, pq.p, pq.q, d, type_bound, search_budget, vertex_cap, universe, tuple(entries),
                       searched, tuple(sorted(order_values)))


def doubling_holds(values) -> bool:
    """Each value of the sorted sequence is at most twice its predecessor."""
    values = sorted(values)
    return all(b <= 2 * a for a, b in zip(values, values[1:]))


@dataclass(frozen=True)
class SpotCheck:
    checked: int
    violations: tuple
    per_type: dict

    @property
    def ok(self) -> bool:
        return not self.violations


def _sample_rooted(k: int, universe: str, rng: random.Random) -> RootedPartialKTree:
    n = rng.randint(k + 1, 14)
    keep = rng.choice((0.3, 0.5, 0.7, 0.9, 1.0))
    t = random_bipartite_partial_k_tree(k, n, keep, seed=rng.getrandbits(32))
    if universe == "forest" and n > 2:
        # any two vertices of the forest may serve as roots
        roots = tuple(rng.sample(range(n), 2))
        return RootedPartialKTree(t.graph, 1, roots, None)
    return t


def spot_check(table: GadgetTable, samples: int = 50, seed: int = 0, max_attempts: int = 200_000) -> SpotCheck:
    """Compare each gadget's F-set with freshly sampled graphs of the same type.

    Draws random bipartite rooted graphs from the table's universe until every
    type has ``samples`` draws or ``max_attempts`` is used up; a violation is a
    sample whose F-set misses something the gadget's F-set contains.
    """
    rng = random.Random(seed)
    pq = table.pq
    need = {g.type: samples for g in table.entries}
    count = {g.type: 0 for g in table.entries}
    violations = []
    attempts = 0
    while any(need.values()) and attempts < max_attempts:
        attempts += 1
        t = _sample_rooted(table.k, table.universe, rng)
        m = type_of(t)
        if not need.get(m):
            continue
        need[m] -= 1
        count[m] += 1
        assert is_bipartite(t.graph)
        gadget = table.lookup(m)
        if not gadget.fset.issubset(f_set(t, pq)):
            violations.append((m, emit_graph(t)))
    return SpotCheck(sum(count.values()), tuple(violations), count)


__all__ = [
    "Gadget", "GadgetTable", "synthesize_gadgets", "doubling_holds", "SpotCheck", "spot_check",
    "EXHAUSTIVE", "BUDGET_LIMITED",
]
