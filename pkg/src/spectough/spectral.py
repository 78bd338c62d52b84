"""Adjacency spectra, quotient matrices, and eigenvalue interlacing.

Eigenvalues of adjacency matrices come from a dense symmetric solver
(orthogonal-similarity reduction) and are reported descending.  Quotient
matrices of vertex partitions are generally non-symmetric but always have
real spectra (they are similar to symmetric matrices via the block-size
scaling), so a separate small-matrix root finder handles them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import Graph, normalize_vertex_set

#: Absolute accuracy bound shared by every eigenvalue comparison downstream.
TOL = 1e-9

#: Largest matrix the generic (possibly non-symmetric) root finder accepts.
SMALL_MATRIX_LIMIT = 16


class NonRealSpectrumError(ValueError):
    """A matrix expected to have a real spectrum did not."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with the solver accuracy bound."""

    values: tuple[float, ...]
    tol: float = TOL

    def __len__(self) -> int:
        return len(self.values)

    def lambda_k(self, k: int) -> float:
        """k-th largest eigenvalue, 1-indexed."""
        if not 1 <= k <= len(self.values):
            raise IndexError(f"eigenvalue index {k} out of range 1..{len(self.values)}")
        return self.values[k - 1]


def eigenvalues(g: Graph) -> Spectrum:
    if g.n == 0:
        raise ValueError("spectrum of the empty graph is undefined")
    vals = np.linalg.eigvalsh(g.adjacency_matrix())
    return Spectrum(tuple(float(x) for x in vals[::-1]))


def lambda_k(g: Graph, k: int) -> float:
    return eigenvalues(g).lambda_k(k)


def spectral_radius(g: Graph) -> float:
    # adjacency matrices are non-negative, so the radius is the top eigenvalue
    return eigenvalues(g).lambda_k(1)


@dataclass(frozen=True)
class Partition:
    """Disjoint non-empty vertex blocks covering 0..n-1."""

    blocks: tuple[tuple[int, ...], ...]

    @staticmethod
    def of(blocks: Sequence[Sequence[int]], n: int) -> "Partition":
        norm = []
        seen: set[int] = set()
        for block in blocks:
            members = normalize_vertex_set(block, n)
            if not members:
                raise ValueError("empty partition block")
            if seen.intersection(members):
                raise ValueError("partition blocks overlap")
            seen.update(members)
            norm.append(members)
        if len(seen) != n:
            raise ValueError("partition does not cover all vertices")
        return Partition(tuple(norm))


@dataclass(frozen=True)
class QuotientMatrix:
    """Average row sums of the adjacency blocks under a partition."""

    entries: tuple[tuple[float, ...], ...]
    equitable: bool
    block_sizes: tuple[int, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.entries)


def quotient_matrix(g: Graph, p: Partition) -> QuotientMatrix:
    """Entry (i, j) is the average number of block-j neighbors over block i.

    The partition is equitable exactly when those neighbor counts are
    constant within every block, in which case the quotient's eigenvalues
    are eigenvalues of the graph itself.
    """
    Partition.of(p.blocks, g.n)  # revalidate against this graph
    masks = []
    for block in p.blocks:
        m = 0
        for v in block:
            m |= 1 << v
        masks.append(m)
    entries = []
    equitable = True
    for block in p.blocks:
        row = []
        for mask in masks:
            counts = [(g.rows[v] & mask).bit_count() for v in block]
            if counts.count(counts[0]) != len(counts):
                equitable = False
            row.append(sum(counts) / len(block))
        entries.append(tuple(row))
    sizes = tuple(len(block) for block in p.blocks)
    return QuotientMatrix(tuple(entries), equitable, sizes)


def eigenvalues_small_matrix(m: Sequence[Sequence[float]]) -> tuple[float, ...]:
    """All eigenvalues of a small real matrix, sorted descending.

    The matrix need not be symmetric, but its spectrum must be real to
    within TOL; quotient matrices always qualify.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix is not square")
    if a.shape[0] > SMALL_MATRIX_LIMIT:
        raise ValueError(f"matrix order {a.shape[0]} exceeds limit {SMALL_MATRIX_LIMIT}")
    roots = np.linalg.eigvals(a)
    worst = float(np.max(np.abs(roots.imag))) if len(roots) else 0.0
    if worst > TOL:
        raise NonRealSpectrumError(f"imaginary part {worst:.3e} exceeds tolerance")
    return tuple(sorted((float(x) for x in roots.real), reverse=True))


def check_interlacing(outer: Spectrum, inner: Sequence[float], tol: float = TOL) -> bool:
    """Whether lambda_i >= mu_i >= lambda_{n-m+i} holds for all i, with slack tol."""
    n, m = len(outer.values), len(inner)
    if m > n:
        raise ValueError(f"inner spectrum longer than outer ({m} > {n})")
    mu = sorted(inner, reverse=True)
    lam = outer.values
    for i in range(m):
        if mu[i] > lam[i] + tol:
            return False
        if mu[i] < lam[n - m + i] - tol:
            return False
    return True
