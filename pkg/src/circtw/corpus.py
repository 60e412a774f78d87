"""Small structured corpora of bipartite rooted graphs.

Every item is a rooted graph of tree-width at most ``k`` whose roots double
as the precolored vertices of an extension-distance probe. Families: root
paths, caterpillars, even cycles, ladders, theta graphs, spiders, and seeded
random bipartite partial k-trees. Items carry a certificate whenever their
roots admit one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import Graph, cycle_graph, is_bipartite, path_graph
from .precolor import ProbeInstance
from .treewidth import RootedPartialKTree, certify, random_bipartite_partial_k_tree


@dataclass(frozen=True)
class CorpusItem:
    name: str
    tree: RootedPartialKTree

    def probe(self) -> ProbeInstance:
        return ProbeInstance(self.tree.graph, self.tree.roots, self.name)


def rooted_with_certificate(graph: Graph, roots, k: int) -> RootedPartialKTree:
    """Rooted graph with a certificate if the roots allow one, otherwise uncertified."""
    roots = tuple(roots)
    t = certify(graph, roots, k, cap=max(16, graph.n))
    return t if t is not None else RootedPartialKTree(graph, k, roots, None)


def path_items(max_vertices: int = 18):
    for length in range(1, max_vertices):
        yield CorpusItem(f"path-{length}", rooted_with_certificate(path_graph(length + 1), (0, length), 1))


def caterpillar_items(max_vertices: int = 18):
    # spine 0..L with one leaf on every interior spine vertex
    for length in range(2, max_vertices):
        n = 2 * length
        if n > max_vertices:
            break
        edges = [(i, i + 1) for i in range(length)]
        edges += [(i, length + i) for i in range(1, length)]
        yield CorpusItem(f"caterpillar-{length}", rooted_with_certificate(Graph.from_edges(n, edges), (0, length), 1))


def cycle_items(max_vertices: int = 18):
    for n in range(4, max_vertices + 1, 2):
        g = cycle_graph(n)
        seen = set()
        for a in range(1, n // 2 + 1):
            for b in range(a + 1, n):
                key = tuple(sorted((a, b - a, n - b)))
                if key in seen:
                    continue
                seen.add(key)
                yield CorpusItem(f"cycle-{n}-{a}-{b}", rooted_with_certificate(g, (0, a, b), 2))


def ladder_items(max_vertices: int = 18):
    for m in range(2, max_vertices // 2 + 1):
        edges = [(i, i + 1) for i in range(m - 1)] + [(m + i, m + i + 1) for i in range(m - 1)]
        edges += [(i, m + i) for i in range(m)]
        g = Graph.from_edges(2 * m, edges)
        for roots in ((0, m - 1, 2 * m - 1), (0, m, 2 * m - 1), (0, m - 1, m)):
            yield CorpusItem(f"ladder-{m}-{'-'.join(map(str, roots))}", rooted_with_certificate(g, roots, 2))


def theta_items(max_vertices: int = 18):
    # two poles joined by c internally disjoint paths of length L
    for length in range(2, max_vertices):
        for c in range(2, 5):
            n = 2 + c * (length - 1)
            if n > max_vertices:
                continue
            edges, nxt = [], 2
            middle = None
            for _ in range(c):
                chain = [0] + list(range(nxt, nxt + length - 1)) + [1]
                nxt += length - 1
                edges += list(zip(chain, chain[1:]))
                if middle is None:
                    middle = chain[len(chain) // 2]
            g = Graph.from_edges(n, edges)
            yield CorpusItem(f"theta-{length}-{c}", rooted_with_certificate(g, (0, 1, middle), 2))


def spider_items(max_vertices: int = 18):
    for a in range(1, 7):
        for b in range(a, 7):
            for c in range(b, 7):
                n = 1 + a + b + c
                if n > max_vertices:
                    continue
                edges, ends, nxt = [], [], 1
                for leg in (a, b, c):
                    chain = [0] + list(range(nxt, nxt + leg))
                    nxt += leg
                    edges += list(zip(chain, chain[1:]))
                    ends.append(chain[-1])
                g = Graph.from_edges(n, edges)
                yield CorpusItem(f"spider-{a}-{b}-{c}", rooted_with_certificate(g, ends, 2))


def random_items(count: int = 40, max_vertices: int = 18, seed: int = 0):
    for i in range(count):
        k = 1 + i % 2
        n = 4 + (i * 7) % (max_vertices - 3)
        t = random_bipartite_partial_k_tree(k, n, 0.6 + 0.1 * (i % 4), seed=seed + i)
        yield CorpusItem(f"random-{k}-{n}-{seed + i}", t)


def structured_corpus(max_vertices: int = 18, random_count: int = 40, seed: int = 0) -> list[CorpusItem]:
    """All families up to ``max_vertices`` vertices, in a fixed order."""
    items = []
    for family in (path_items, caterpillar_items, cycle_items, ladder_items, theta_items, spider_items):
        items.extend(family(max_vertices))
    items.extend(random_items(random_count, max_vertices, seed))
    for item in items:
        assert is_bipartite(item.tree.graph) and item.tree.n <= max_vertices, item.name
    return items


def path_probe_corpus(max_length: int = 12) -> list[ProbeInstance]:
    return [ProbeInstance(path_graph(L + 1), (0, L), f"path-{L}") for L in range(1, max_length + 1)]


__all__ = [
    "CorpusItem", "rooted_with_certificate", "structured_corpus", "path_probe_corpus",
    "path_items", "caterpillar_items", "cycle_items", "ladder_items", "theta_items", "spider_items",
    "random_items",
]
