"""Undirected simple graphs over dense vertex labels 0..n-1.

Adjacency is stored as one integer bitmask per vertex, which keeps edge
queries O(1) and lets the cut-enumeration code work on raw machine words.
Graphs are immutable; every operation returns a new Graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


@dataclass(frozen=True)
class Graph:
    """Simple graph; ``rows[v]`` is the neighbor bitmask of vertex v."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.rows) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in range(v):
                if (self.rows[u] >> v & 1) != (self.rows[v] >> u & 1):
                    raise ValueError(f"adjacency not symmetric at pair ({u}, {v})")

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_iter_bits(self.rows[v]))

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in _iter_bits(self.rows[v]):
                if u > v:
                    yield (v, u)

    def is_complete(self) -> bool:
        return all(row.bit_count() == self.n - 1 for row in self.rows)

    def adjacency_matrix(self):
        """Dense 0/1 numpy array, float64 (ready for the eigensolver)."""
        import numpy as np

        a = np.zeros((self.n, self.n))
        for v, row in enumerate(self.rows):
            for u in _iter_bits(row):
                a[v, u] = 1.0
        return a


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def normalize_vertex_set(s: Iterable[int], n: int) -> tuple[int, ...]:
    """Sorted duplicate-free vertex tuple; rejects out-of-range indices."""
    members = sorted(set(s))
    if members and (members[0] < 0 or members[-1] >= n):
        raise IndexError(f"vertex set not within 0..{n - 1}")
    return tuple(members)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_adjacency(matrix: Sequence[Sequence[float]]) -> Graph:
    """Build from a square 0/1 matrix; symmetry and zero diagonal enforced."""
    n = len(matrix)
    rows = [0] * n
    for i in range(n):
        if len(matrix[i]) != n:
            raise ValueError("adjacency matrix is not square")
        for j in range(n):
            x = matrix[i][j]
            if x not in (0, 1, 0.0, 1.0):
                raise ValueError(f"entry ({i}, {j}) is not 0 or 1")
            if x:
                rows[i] |= 1 << j
    return Graph(n, tuple(rows))  # Graph validates symmetry and the diagonal


# -- connectivity ---------------------------------------------------------


@dataclass(frozen=True)
class ComponentDecomposition:
    """Per-vertex component ids (0..count-1, in order of smallest member)."""

    labels: tuple[int, ...]
    count: int


def components(g: Graph) -> ComponentDecomposition:
    labels = [-1] * g.n
    count = 0
    seen = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            reach = 0
            for u in _iter_bits(frontier):
                reach |= g.rows[u]
            frontier = reach & ~comp
            comp |= frontier
        for u in _iter_bits(comp):
            labels[u] = count
        seen |= comp
        count += 1
    return ComponentDecomposition(tuple(labels), count)


def is_connected(g: Graph) -> bool:
    return components(g).count == 1


def component_vertex_sets(g: Graph) -> list[tuple[int, ...]]:
    dec = components(g)
    out: list[list[int]] = [[] for _ in range(dec.count)]
    for v, c in enumerate(dec.labels):
        out[c].append(v)
    return [tuple(block) for block in out]


# -- operations -----------------------------------------------------------


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on V minus s; surviving vertices keep their order."""
    drop = normalize_vertex_set(s, g.n)
    drop_mask = 0
    for v in drop:
        drop_mask |= 1 << v
    keep = [v for v in range(g.n) if not (drop_mask >> v & 1)]
    relabel = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in _iter_bits(g.rows[v] & ~drop_mask):
            row |= 1 << relabel[u]
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    keep = set(normalize_vertex_set(vertices, g.n))
    return delete_vertices(g, [v for v in range(g.n) if v not in keep])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = tuple((full & ~row & ~(1 << v)) for v, row in enumerate(g.rows))
    return Graph(g.n, rows)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    rows = g1.rows + tuple(row << shift for row in g2.rows)
    return Graph(g1.n + g2.n, rows)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    n1, n2 = g1.n, g2.n
    left_mask = (1 << n1) - 1
    right_mask = ((1 << n2) - 1) << n1
    rows = tuple(row | right_mask for row in g1.rows) + tuple(
        (row << n1) | left_mask for row in g2.rows
    )
    return Graph(n1 + n2, rows)


def is_regular(g: Graph) -> Optional[int]:
    """The common degree, or None if degrees differ (or the graph is empty)."""
    if g.n == 0:
        return None
    degs = g.degrees()
    d = degs[0]
    return d if all(x == d for x in degs) else None


# -- builders -------------------------------------------------------------


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def edgeless(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle requires at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    return join(edgeless(m), edgeless(n))


def copies_k2_complement(k: int) -> Graph:
    """Complement of k disjoint edges: 2k vertices, each of degree 2k-2.

    Vertices 2i and 2i+1 form the i-th non-adjacent pair.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    return from_edges(
        2 * k,
        [
            (u, v)
            for u in range(2 * k)
            for v in range(u + 1, 2 * k)
            if not (v == u + 1 and u % 2 == 0)
        ],
    )
