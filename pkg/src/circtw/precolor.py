"""Root precolorings, F-sets, color spread along paths, and the extension-distance probe.

F-set indexing is frozen: a total root precoloring ``(c_0, ..., c_k)`` has
index ``sum(c_i * p**i)``, i.e. mixed radix with root 0 least significant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .circular import PQParams, bag_tables, is_pq_colorable
from .config import STATE_LIMIT
from .errors import BudgetExhausted, CirctwError, InvalidPrecoloring
from .graph import INF, Graph, distances, is_bipartite
from .treewidth import RootedPartialKTree


@dataclass(frozen=True)
class Precoloring:
    """Colors for some root indices; unlisted roots are unconstrained."""

    entries: Mapping[int, int]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "entries", dict(self.entries))
        for i, c in self.entries.items():
            if i < 0:
                raise InvalidPrecoloring(f"negative root index {i}")
            if not 0 <= c < self.p:
                raise InvalidPrecoloring(f"color {c} outside 0..{self.p - 1}")

    @classmethod
    def total(cls, colors: Sequence[int], p: int) -> "Precoloring":
        return cls(dict(enumerate(colors)), p)

    def on(self, t: RootedPartialKTree) -> dict:
        """Vertex-level precoloring for ``t``."""
        if any(i > t.k for i in self.entries):
            raise InvalidPrecoloring(f"root index out of range 0..{t.k}")
        return {t.roots[i]: c for i, c in self.entries.items()}


def encode(colors: Sequence[int], p: int) -> int:
    return sum(c * p ** i for i, c in enumerate(colors))


def decode(index: int, p: int, width: int) -> tuple:
    out = []
    for _ in range(width):
        index, c = divmod(index, p)
        out.append(c)
    return tuple(out)


@dataclass(frozen=True)
class FSet:
    """Set of total root precolorings, as a Python-int bitset of length p**(k+1)."""

    k: int
    p: int
    bits: int = 0

    @property
    def size(self) -> int:
        return self.p ** (self.k + 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.size:
            raise ValueError("bitset longer than p**(k+1)")

    def __contains__(self, colors) -> bool:
        return bool(self.bits >> encode(colors, self.p) & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __iter__(self):
        width = self.k + 1
        for i in range(self.size):
            if self.bits >> i & 1:
                yield decode(i, self.p, width)

    def _same_space(self, other):
        if (self.k, self.p) != (other.k, other.p):
            raise ValueError("F-sets over different (k, p)")

    def __and__(self, other: "FSet") -> "FSet":
        self._same_space(other)
        return FSet(self.k, self.p, self.bits & other.bits)

    def issubset(self, other: "FSet") -> bool:
        self._same_space(other)
        return self.bits & ~other.bits == 0

    @property
    def is_full(self) -> bool:
        return self.bits == self.full_mask

    def complement(self) -> "FSet":
        return FSet(self.k, self.p, self.full_mask & ~self.bits)

    def to_hex(self) -> str:
        return format(self.bits, "x")

    @classmethod
    def from_hex(cls, k: int, p: int, text: str) -> "FSet":
        return cls(k, p, int(text, 16))

    @classmethod
    def from_members(cls, k: int, p: int, members: Iterable[Sequence[int]]) -> "FSet":
        bits = 0
        for colors in members:
            bits |= 1 << encode(colors, p)
        return cls(k, p, bits)

    @classmethod
    def full(cls, k: int, p: int) -> "FSet":
        return cls(k, p, (1 << p ** (k + 1)) - 1)

    def map_colors(self, fn) -> "FSet":
        """Image under a per-color map applied to every root."""
        return FSet.from_members(self.k, self.p, (tuple(fn(c) for c in cols) for cols in self))


def extends(t: RootedPartialKTree, c: Precoloring, pq: PQParams) -> bool:
    """Whether the (possibly partial) root precoloring extends to a (p,q)-coloring of ``t``."""
    if c.p != pq.p:
        raise InvalidPrecoloring("precoloring and (p,q) disagree on p")
    return is_pq_colorable(t, pq, c.on(t)) is not None


def f_set(t: RootedPartialKTree, pq: PQParams, method: str = "auto",
          state_limit: int = STATE_LIMIT) -> FSet:
    """All extendable total root precolorings.

    ``method="dp"`` reads the root table of one bag-tree sweep,
    ``method="solver"`` makes one solver call per precoloring, and ``"auto"``
    uses the sweep whenever a certificate is present.
    """
    width = t.k + 1
    size = pq.p ** width
    if size > state_limit:
        raise BudgetExhausted(f"p^(k+1) = {size} exceeds the state limit {state_limit}")
    if method == "auto":
        method = "dp" if t.certified else "solver"
    if method == "dp":
        _, _, tables = bag_tables(t, pq, None, state_limit)
        flat = np.transpose(tables[0], list(range(width))[::-1]).ravel()
        bits = int.from_bytes(np.packbits(flat, bitorder="little").tobytes(), "little")
        return FSet(t.k, pq.p, bits)
    if method == "solver":
        bits = 0
        for i in range(size):
            partial = dict(zip(t.roots, decode(i, pq.p, width)))
            if is_pq_colorable(t.graph, pq, partial) is not None:
                bits |= 1 << i
        return FSet(t.k, pq.p, bits)
    raise ValueError(f"unknown method {method!r}")


def spread(pq: PQParams, start_color: int, length: int) -> frozenset:
    """Colors reachable at the far end of a path of ``length`` edges."""
    pq.require_above_two()
    current = {start_color}
    for _ in range(length):
        current = {b for a in current for b in range(pq.p) if pq.ok(a, b)}
    return frozenset(current)


# -- extension-distance probe ------------------------------------------------

@dataclass(frozen=True)
class ProbeInstance:
    graph: Graph
    precolored: tuple
    name: str = ""

    @property
    def separation(self):
        """Smallest pairwise distance among the precolored vertices."""
        best = INF
        for u in self.precolored:
            dist = distances(self.graph, [u])
            for v in self.precolored:
                if v != u:
                    best = min(best, dist[v])
        return best


@dataclass(frozen=True)
class ProbeResult:
    d: int
    witness: Optional[ProbeInstance] = None
    witness_coloring: Optional[dict] = None
    failing_separations: tuple = field(default=())


class EmptyCorpus(CirctwError):
    pass


def failing_precoloring(inst: ProbeInstance, pq: PQParams) -> Optional[dict]:
    """A precoloring of ``inst.precolored`` that does not extend, or ``None``.

    Enumerates every precoloring with the first vertex pinned to color 0;
    rotating all colors maps extendable precolorings to extendable ones, so
    nothing is lost.
    """
    verts = list(inst.precolored)
    for rest in product(range(pq.p), repeat=len(verts) - 1):
        colors = dict(zip(verts, (0,) + rest))
        if is_pq_colorable(inst.graph, pq, colors) is None:
            return colors
    return None


def probe_extension_distance(pq: PQParams, corpus: Sequence) -> ProbeResult:
    """Smallest d such that no corpus instance with pairwise precolored distances >= d fails.

    ``corpus`` holds :class:`ProbeInstance` values or ``(graph, vertices)``
    pairs. The answer is relative to the corpus: it falsifies candidate values
    of the true extension constant, it does not prove one.
    """
    pq.require_above_two()
    if not corpus:
        raise EmptyCorpus("probe needs at least one instance")
    worst, worst_coloring, worst_sep = None, None, 0
    failing = []
    for item in corpus:
        inst = item if isinstance(item, ProbeInstance) else ProbeInstance(item[0], tuple(item[1]))
        if len(inst.precolored) < 2:
            raise ValueError("every instance needs at least two precolored vertices")
        if not is_bipartite(inst.graph):
            raise ValueError(f"instance {inst.name or inst.graph} is not bipartite")
        sep = inst.separation
        if sep < worst_sep:
            continue  # cannot raise the answer
        bad = failing_precoloring(inst, pq)
        if bad is not None:
            failing.append(sep)
            if worst is None or sep > worst_sep:
                worst, worst_coloring, worst_sep = inst, bad, sep
    if worst is None:
        return ProbeResult(1)
    return ProbeResult(worst_sep + 1, worst, worst_coloring, tuple(sorted(set(failing))))


def pairwise_separation(g: Graph, vertices: Sequence[int]):
    return ProbeInstance(g, tuple(vertices)).separation


__all__ = [
    "Precoloring", "FSet", "encode", "decode", "extends", "f_set", "spread",
    "ProbeInstance", "ProbeResult", "EmptyCorpus", "probe_extension_distance",
    "failing_precoloring", "pairwise_separation",
]
