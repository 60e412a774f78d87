"""One replacement step on a non-colorable partial k-tree of large odd-girth.

Cut the graph into ``G1 ⊕ G2`` with ``G1`` small, swap ``G1`` for a table
gadget whose F-set is no larger and whose type dominates ``G1``'s, and check
that the result is smaller, still not (p,q)-colorable, and has no shorter odd
cycle. If the gadget table really had the defining property for every
bipartite graph, repeating the step would shrink any counterexample forever,
which is impossible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circular import PQParams, is_pq_colorable
from .errors import KMismatch, LemmaViolation, NoStep, PreconditionFailed, TooSmall
from .gadgets import Gadget, GadgetTable
from .graph import odd_girth, is_bipartite
from .precolor import f_set
from .treewidth import RootedPartialKTree, glue, split
from .typelattice import TypeMatrix, leq, type_of


@dataclass(frozen=True)
class ProofStep:
    tree: RootedPartialKTree
    gadget: Gadget
    first: RootedPartialKTree
    second: RootedPartialKTree
    first_type: TypeMatrix
    odd_girth_before: object
    odd_girth_after: object

    @property
    def graph(self):
        return self.tree.graph


def proof_step(t: RootedPartialKTree, pq: PQParams, n: int, gadgets: GadgetTable,
               enforce_girth: bool = True) -> ProofStep:
    """Replace a piece of ``t`` with ``n+1..2n`` vertices by a table gadget.

    Preconditions: ``t`` certified, ``n`` at least the largest gadget order,
    ``|V(t)| >= 3n``, ``t`` not (p,q)-colorable and, with ``enforce_girth``,
    odd-girth at least three times the largest gadget order. Turning
    ``enforce_girth`` off allows small demonstrations; the cut-off piece must
    then still happen to be bipartite.
    """
    if t.k != gadgets.k:
        raise KMismatch(f"graph has k={t.k}, table has k={gadgets.k}")
    if (pq.p, pq.q) != (gadgets.p, gadgets.q):
        raise PreconditionFailed("table was built for different (p, q)")
    if not t.certified:
        raise PreconditionFailed("input needs a certificate")
    big = gadgets.max_order
    if n < big:
        raise PreconditionFailed(f"n={n} is below the largest gadget order {big}")
    if t.n < 3 * n:
        raise PreconditionFailed(f"need at least {3 * n} vertices, got {t.n}")
    girth = odd_girth(t.graph)
    if enforce_girth and girth < 3 * big:
        raise PreconditionFailed(f"odd-girth {girth} is below {3 * big}")
    if is_pq_colorable(t, pq) is not None:
        raise PreconditionFailed(f"input is ({pq.p},{pq.q})-colorable")

    try:
        g1, g2 = split(t, n)
    except TooSmall as exc:
        raise PreconditionFailed(str(exc)) from None
    if not is_bipartite(g1.graph):
        if enforce_girth:
            raise LemmaViolation("small part has an odd cycle despite the odd-girth bound", dump={"t": t, "n": n})
        raise NoStep("small part is not bipartite")

    m1 = type_of(g1)
    f1 = f_set(g1, pq)
    candidates = [g for g in gadgets.entries if leq(m1, g.type) and g.fset.issubset(f1)]
    if not candidates:
        raise NoStep(f"no gadget dominates type {m1.pairs()} with a smaller F-set")
    gadget = min(candidates, key=lambda g: g.order)

    out = glue(gadget.tree, g2)
    problems = []
    if not out.n < t.n:
        problems.append(f"result has {out.n} vertices, input had {t.n}")
    if is_pq_colorable(out, pq) is not None:
        problems.append("result became colorable")
    after = odd_girth(out.graph)
    if after < girth:
        problems.append(f"odd-girth dropped from {girth} to {after}")
    if problems:
        raise LemmaViolation("; ".join(problems), dump={"t": t, "n": n, "gadget": gadget})
    return ProofStep(out, gadget, g1, g2, m1, girth, after)


__all__ = ["ProofStep", "proof_step"]
