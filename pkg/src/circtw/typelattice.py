"""Distance types of rooted partial k-trees and the order on bipartite types.

A type is the (k+1)x(k+1) matrix of root-to-root distances. ``INF`` marks
roots in different components and behaves as ``INF + x == INF``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional

from .config import TYPE_ENUM_LIMIT
from .errors import BudgetExhausted, KMismatch, LemmaViolation, PreconditionFailed
from .graph import INF, distances, is_bipartite
from .treewidth import RootedPartialKTree, glue, random_bipartite_partial_k_tree


@dataclass(frozen=True)
class TypeMatrix:
    k: int
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(INF if x is None or x == INF else int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        size = self.k + 1
        if len(rows) != size or any(len(r) != size for r in rows):
            raise ValueError(f"type for k={self.k} must be {size}x{size}")
        for i in range(size):
            if rows[i][i] != 0:
                raise ValueError("diagonal must be zero")
            for j in range(size):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("type must be symmetric")
                if i != j and not rows[i][j] > 0:
                    raise ValueError("off-diagonal entries must be positive")
        for i, j, l in product(range(size), repeat=3):
            if rows[i][l] > rows[i][j] + rows[j][l]:
                raise ValueError(f"triangle inequality fails at ({i}, {j}, {l})")

    @classmethod
    def from_pairs(cls, k: int, values) -> "TypeMatrix":
        """Build from the upper-triangle entries in order (0,1), (0,2), ..., (k-1,k)."""
        size = k + 1
        rows = [[0] * size for _ in range(size)]
        for (i, j), x in zip(combinations(range(size), 2), values):
            rows[i][j] = rows[j][i] = x
        return cls(k, tuple(map(tuple, rows)))

    @classmethod
    def all_infinite(cls, k: int) -> "TypeMatrix":
        return cls.from_pairs(k, [INF] * ((k + 1) * k // 2))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def pairs(self) -> list:
        return [self.entries[i][j] for i, j in combinations(range(self.k + 1), 2)]

    def finite_max(self):
        finite = [x for x in self.pairs() if x != INF]
        return max(finite) if finite else None

    def to_json(self) -> list:
        return [[None if x == INF else x for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, rows) -> "TypeMatrix":
        return cls(len(rows) - 1, tuple(tuple(INF if x is None else x for x in r) for r in rows))

    def __str__(self):
        return "\n".join(" ".join("inf" if x == INF else str(x) for x in row) for row in self.entries)


def type_of(t: RootedPartialKTree) -> TypeMatrix:
    rows = []
    for r in t.roots:
        dist = distances(t.graph, [r])
        rows.append(tuple(dist[s] for s in t.roots))
    return TypeMatrix(t.k, tuple(rows))


def is_bipartite_type(m: TypeMatrix) -> bool:
    """Every triangle of finite entries has even perimeter."""
    for i, j, l in combinations(range(m.k + 1), 3):
        a, b, c = m[i, j], m[j, l], m[i, l]
        if a != INF and b != INF and c != INF and (a + b + c) % 2:
            return False
    return True


def _same_k(m1, m2):
    if m1.k != m2.k:
        raise KMismatch(f"types for k={m1.k} and k={m2.k}")


def compatible(m1: TypeMatrix, m2: TypeMatrix) -> bool:
    """Entries agree in parity wherever both are finite."""
    _same_k(m1, m2)
    for a, b in zip(m1.pairs(), m2.pairs()):
        if a != INF and b != INF and (a - b) % 2:
            return False
    return True


def leq(m1: TypeMatrix, m2: TypeMatrix) -> bool:
    """``m1 ⪯ m2``: compatible and entrywise at most."""
    return compatible(m1, m2) and all(a <= b for a, b in zip(m1.pairs(), m2.pairs()))


def enumerate_bipartite_types(k: int, bound: int, limit: int = TYPE_ENUM_LIMIT) -> list[TypeMatrix]:
    """All bipartite types with off-diagonal entries in ``{1..bound} ∪ {INF}``.

    Lexicographic in the upper-triangle entries, INF sorting last.
    """
    npairs = k * (k + 1) // 2
    if (bound + 1) ** npairs > limit:
        raise BudgetExhausted(f"{(bound + 1) ** npairs} candidate types exceed the limit {limit}")
    values = list(range(1, bound + 1)) + [INF]
    index = {pair: n for n, pair in enumerate(combinations(range(k + 1), 2))}

    def entry(vals, i, j):
        if i == j:
            return 0
        return vals[index[(i, j) if i < j else (j, i)]]

    out = []
    size = k + 1
    for vals in product(values, repeat=npairs):
        if any(entry(vals, i, l) > entry(vals, i, j) + entry(vals, j, l)
               for i, j, l in product(range(size), repeat=3)):
            continue
        m = TypeMatrix.from_pairs(k, vals)
        if is_bipartite_type(m):
            out.append(m)
    return out


@dataclass(frozen=True)
class GlueReport:
    type_a: TypeMatrix
    type_b: TypeMatrix
    type_glued: TypeMatrix
    compatible: bool
    bipartite: bool
    dominates: bool

    @property
    def ok(self) -> bool:
        return self.compatible and self.bipartite and self.dominates


def check_glue_type(a: RootedPartialKTree, b: RootedPartialKTree, m0: TypeMatrix) -> GlueReport:
    """Check the glue invariant: compatible types, bipartite glue, and ``m0 ⪯`` glued type.

    A failure of any of the three raises :class:`LemmaViolation` carrying the
    instance.
    """
    if not (is_bipartite(a.graph) and is_bipartite(b.graph)):
        raise PreconditionFailed("both parts must be bipartite")
    if not is_bipartite_type(m0):
        raise PreconditionFailed("m0 must be a bipartite type")
    ta, tb = type_of(a), type_of(b)
    if not (leq(m0, ta) and leq(m0, tb)):
        raise PreconditionFailed("m0 must lie below both part types")
    glued = glue(a, b)
    tg = type_of(glued)
    report = GlueReport(ta, tb, tg, compatible(ta, tb), is_bipartite(glued.graph), leq(m0, tg))
    if not report.ok:
        raise LemmaViolation("glue invariant failed", dump={"a": a, "b": b, "m0": m0, "report": report})
    return report


def side_type(sides) -> TypeMatrix:
    """Smallest bipartite type for roots on the given sides: 1 across, 2 within."""
    k = len(sides) - 1
    return TypeMatrix.from_pairs(k, [1 if sides[i] != sides[j] else 2 for i, j in combinations(range(k + 1), 2)])


def random_glue_instance(k: int, rng: random.Random, max_vertices: int = 20):
    """Two random bipartite rooted partial k-trees whose roots share a 2-coloring, and the side type below both."""
    sides = [rng.randrange(2) for _ in range(k + 1)]
    parts = []
    for _ in range(2):
        n = rng.randint(k + 1, max_vertices)
        keep = rng.choice((0.4, 0.6, 0.8, 1.0))
        parts.append(random_bipartite_partial_k_tree(k, n, keep, seed=rng.getrandbits(32), root_sides=sides))
    return parts[0], parts[1], side_type(sides)


@dataclass(frozen=True)
class GlueSuiteReport:
    instances: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def glue_type_suite(count: int = 500, seed: int = 0, ks=(1, 2, 3), max_vertices: int = 20) -> GlueSuiteReport:
    """Run :func:`check_glue_type` on ``count`` random instances, collecting violations."""
    rng = random.Random(seed)
    violations = []
    for i in range(count):
        k = ks[i % len(ks)]
        a, b, m0 = random_glue_instance(k, rng, max_vertices)
        try:
            check_glue_type(a, b, m0)
        except LemmaViolation as exc:
            violations.append(exc)
    return GlueSuiteReport(count, tuple(violations))


__all__ = [
    "TypeMatrix", "type_of", "is_bipartite_type", "compatible", "leq",
    "enumerate_bipartite_types", "GlueReport", "check_glue_type", "side_type",
    "random_glue_instance", "GlueSuiteReport", "glue_type_suite",
]
