"""Shared graph builders and partition utilities for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

from spectough import Graph, Partition, from_edges


def petersen_graph() -> Graph:
    """Outer 5-cycle, spokes, inner pentagram."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, edges)


def graph_from_mask(n: int, mask: int) -> Graph:
    """Decode an upper-triangle bitmask, pairs in combinations order."""
    rows = [0] * n
    for k, (i, j) in enumerate(combinations(range(n), 2)):
        if mask >> k & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def random_partition(rng: random.Random, n: int) -> Partition:
    """Uniformly messy partition; blocks listed by first appearance."""
    k = rng.randint(1, n)
    assign = [rng.randrange(k) for _ in range(n)]
    blocks: dict[int, list[int]] = {}
    for v, c in enumerate(assign):
        blocks.setdefault(c, []).append(v)
    return Partition.of(list(blocks.values()), n)


def color_refinement(g: Graph) -> Partition:
    """Coarsest equitable partition, by iterated neighbor-color counting."""
    color = [0] * g.n
    while True:
        sig: dict[tuple, int] = {}
        new = []
        for v in range(g.n):
            counts: dict[int, int] = {}
            for u in g.neighbors(v):
                counts[color[u]] = counts.get(color[u], 0) + 1
            key = (color[v], tuple(sorted(counts.items())))
            if key not in sig:
                sig[key] = len(sig)
            new.append(sig[key])
        if new == color:
            break
        color = new
    blocks: dict[int, list[int]] = {}
    for v, c in enumerate(color):
        blocks.setdefault(c, []).append(v)
    return Partition.of(list(blocks.values()), g.n)
