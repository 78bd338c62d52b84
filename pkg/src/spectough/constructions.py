"""Extremal families sitting exactly on the toughness thresholds.

Each family takes d disjoint copies of a near-regular building block H
(all degrees d except for a small deficient class of degree d-1) and wires
a new independent hub set to the deficient vertices, one matching edge per
copy, restoring d-regularity.  Removing the hub leaves the d copies as
components, so the graph is not 1/b-tough, while its decisive eigenvalue
lands exactly on the certification threshold.  That combination is what
makes the thresholds sharp.

Layout convention (load-bearing for witnesses and golden encodings): hub
vertices come first, then the copies consecutively; inside a copy the
deficient class occupies the lowest indices, and hub vertex j is matched
to deficient vertex j of every copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import (
    Graph,
    complement,
    complete,
    copies_k2_complement,
    cycle,
    disjoint_union,
    from_edges,
    is_connected,
    is_regular,
    join,
)


class InfeasibleConstructionError(ValueError):
    """Parameters violate a parity or range constraint of the family."""


class Family(str, Enum):
    H = "H"
    G1STAR = "G1star"
    G2STAR = "G2star"
    G3STAR = "G3star"
    G4STAR = "G4star"


@dataclass(frozen=True)
class ExtremalSpec:
    family: Family
    d: int
    b: int

    def build(self) -> Graph:
        return build_family(self.family, self.d, self.b)


def _ratio_ceil(d: int, b: int) -> int:
    if d < 1 or b < 1:
        raise InfeasibleConstructionError("d and b must be positive integers")
    return -(-d // b)


def build_H(d: int, b: int) -> Graph:
    """Building block with a small degree-(d-1) class, all other degrees d.

    The shape depends on c = ceil(d/b):
      c <= 2          (K1 u K2) joined to (d-1)/2 non-adjacent pairs; d odd.
                      One deficient vertex (the K1).
      c >= 3 odd      (c-1)/2 non-adjacent pairs joined to K_{d-c+2}.
                      Deficient class: the c-1 pair vertices.
      c >= 4 even,
      d odd           complement of C_{c-1} joined to (d-c+3)/2 pairs.
                      Deficient class: the c-1 cycle-complement vertices.
      c >= 4 even,
      d even          (c-2)/2 non-adjacent pairs joined to K_{d-c+3}.
                      Deficient class: the c-2 pair vertices.

    The deficient class always occupies the lowest vertex indices.
    """
    c = _ratio_ceil(d, b)
    if c <= 2:
        if d % 2 == 0:
            raise InfeasibleConstructionError(
                f"ceil(d/b)={c} <= 2 requires odd d so that (d-1)/2 pairs exist; got d={d}"
            )
        return join(
            disjoint_union(complete(1), complete(2)),
            copies_k2_complement((d - 1) // 2),
        )
    if c % 2 == 1:
        return join(copies_k2_complement((c - 1) // 2), complete(d - c + 2))
    if d % 2 == 1:
        return join(complement(cycle(c - 1)), copies_k2_complement((d - c + 3) // 2))
    return join(copies_k2_complement((c - 2) // 2), complete(d - c + 3))


def deficient_vertices(h: Graph, d: int) -> tuple[int, ...]:
    """Vertices of degree exactly d-1, in index order."""
    return tuple(v for v in range(h.n) if h.degree(v) == d - 1)


def hub_size(family: Family, d: int, b: int) -> int:
    """Number of hub vertices the family attaches (they get indices 0..size-1)."""
    c = _ratio_ceil(d, b)
    if family is Family.G1STAR or family is Family.G2STAR:
        return c - 1
    if family is Family.G3STAR:
        return c - 2
    if family is Family.G4STAR:
        return 1
    raise ValueError(f"family {family.value} has no hub")


def _assemble(d: int, hub: int, h: Graph) -> Graph:
    """Hub of `hub` isolated vertices plus d copies of h, matched as documented."""
    attach = deficient_vertices(h, d)
    if len(attach) != hub:
        raise InfeasibleConstructionError(
            f"deficiency census mismatch: block has {len(attach)} vertices of "
            f"degree d-1 but the hub needs {hub}"
        )
    n = hub + d * h.n
    edges = []
    for i in range(d):
        off = hub + i * h.n
        for u, v in h.edges():
            edges.append((off + u, off + v))
        for j in range(hub):
            edges.append((j, off + attach[j]))
    g = from_edges(n, edges)
    assert is_regular(g) == d, "assembled graph is not regular"
    assert is_connected(g), "assembled graph is not connected"
    return g


def build_G1star(d: int, b: int) -> Graph:
    """Sharp example for the odd-c branch of the second-eigenvalue threshold."""
    c = _ratio_ceil(d, b)
    if c < 3 or c % 2 == 0:
        raise InfeasibleConstructionError(
            f"this family requires odd ceil(d/b) >= 3; got ceil({d}/{b}) = {c}"
        )
    return _assemble(d, c - 1, build_H(d, b))


def build_G2star(d: int, b: int) -> Graph:
    """Sharp example for the even-c, odd-d branch."""
    c = _ratio_ceil(d, b)
    if c < 3 or c % 2 == 1:
        raise InfeasibleConstructionError(
            f"this family requires even ceil(d/b) >= 4; got ceil({d}/{b}) = {c}"
        )
    if d % 2 == 0:
        raise InfeasibleConstructionError(f"this family requires odd d; got d={d}")
    return _assemble(d, c - 1, build_H(d, b))


def build_G3star(d: int, b: int) -> Graph:
    """Sharp example for the even-c, even-d branch.

    The building block here has c-2 deficient vertices (its pair class),
    so the hub has c-2 vertices; a larger hub would force some copy vertex
    above degree d.  With S the hub, G-S has d components and
    |S|/c(G-S) = (c-2)/d < 1/b, so the graph is not 1/b-tough.
    """
    c = _ratio_ceil(d, b)
    if c < 3 or c % 2 == 1:
        raise InfeasibleConstructionError(
            f"this family requires even ceil(d/b) >= 4; got ceil({d}/{b}) = {c}"
        )
    if d % 2 == 1:
        raise InfeasibleConstructionError(f"this family requires even d; got d={d}")
    return _assemble(d, c - 2, build_H(d, b))


def build_G4star(d: int, b: int) -> Graph:
    """Sharp example for the small-c branch: a single hub vertex, c = 2."""
    c = _ratio_ceil(d, b)
    if c != 2:
        raise InfeasibleConstructionError(
            f"this family requires ceil(d/b) = 2, i.e. b < d <= 2b; got ceil({d}/{b}) = {c}"
        )
    if d % 2 == 0:
        raise InfeasibleConstructionError(f"this family requires odd d; got d={d}")
    return _assemble(d, 1, build_H(d, b))


_BUILDERS = {
    Family.H: build_H,
    Family.G1STAR: build_G1star,
    Family.G2STAR: build_G2star,
    Family.G3STAR: build_G3star,
    Family.G4STAR: build_G4star,
}


def build_family(family: Family | str, d: int, b: int) -> Graph:
    fam = Family(family)
    return _BUILDERS[fam](d, b)


def feasible_star_parameters(max_d: int) -> list[tuple[Family, int, int]]:
    """All (family, d, b) triples with d <= max_d whose builder succeeds.

    b only matters through c = ceil(d/b) and the families constrain c, so
    b <= d covers every distinct feasible combination.
    """
    out = []
    for family in (Family.G1STAR, Family.G2STAR, Family.G3STAR, Family.G4STAR):
        for d in range(1, max_d + 1):
            for b in range(1, d + 1):
                try:
                    build_family(family, d, b)
                except InfeasibleConstructionError:
                    continue
                out.append((family, d, b))
    return out
