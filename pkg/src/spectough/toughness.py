"""Exact toughness by pruned exhaustive search over vertex cuts.

Toughness is min |S| / c(G-S) over all vertex cuts S, defined only for
connected non-complete graphs.  The search enumerates subsets by
increasing size, in lexicographic order within each size, so the reported
witness is deterministic: the (|S|, member-list)-smallest minimizer.
Sizes are pruned with the bound |S|/c >= |S|/(n-|S|), which is monotone
in |S|, and the whole run is capped by an operation budget.

The inner loops run on integer bitmasks; when numba is available they are
JIT-compiled (and cached on disk), otherwise the same code runs as plain
Python.  Ratios are compared by cross-multiplication throughout, so every
decision is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from .graph import Graph, is_connected, is_regular, normalize_vertex_set
from .thresholds import ThresholdParams

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


#: Hard cap on subsets examined per call unless the caller overrides it.
DEFAULT_SUBSET_BUDGET = 50_000_000

#: Largest graph order the exact search accepts.
MAX_ORDER = 30


class ToughnessUndefinedError(ValueError):
    """Raised for complete or disconnected input, where toughness has no value."""


class BudgetExceededError(RuntimeError):
    """The subset enumeration hit its operation cap before finishing."""


@dataclass(frozen=True)
class ToughnessResult:
    tau: Fraction
    witness: tuple[int, ...]
    component_count: int


@dataclass(frozen=True)
class ToughnessDecision:
    """Outcome of the 1/b-toughness test, with a violating cut when false."""

    tough: bool
    witness: Optional[tuple[int, ...]] = None
    component_count: Optional[int] = None


@njit(cache=True)
def _count_components_masked(rows, n, alive):
    count = 0
    seen = np.int64(0)
    for v in range(n):
        bit = np.int64(1) << v
        if alive & bit == 0 or seen & bit != 0:
            continue
        comp = bit
        frontier = bit
        while frontier != 0:
            reach = np.int64(0)
            for u in range(n):
                if frontier & (np.int64(1) << u) != 0:
                    reach |= rows[u]
            frontier = reach & alive & ~comp
            comp |= frontier
        seen |= comp
        count += 1
    return count


@njit(cache=True)
def _toughness_search(rows, n, budget):
    """Minimize |S|/c(G-S) over vertex cuts.

    Returns (status, size, components, witness_mask, work); status 1 means
    the budget ran out.  The sentinel ratio n/1 is worse than any cut.
    """
    full = (np.int64(1) << n) - 1
    best_num = np.int64(n)
    best_den = np.int64(1)
    best_mask = np.int64(0)
    work = np.int64(0)
    idx = np.zeros(n, dtype=np.int64)
    for s in range(1, n - 1):
        # every size-s cut has ratio at least s/(n-s); monotone in s
        if s * best_den >= best_num * (n - s):
            break
        for i in range(s):
            idx[i] = i
        while True:
            work += 1
            if work > budget:
                return 1, best_num, best_den, best_mask, work
            mask = np.int64(0)
            for i in range(s):
                mask |= np.int64(1) << idx[i]
            c = _count_components_masked(rows, n, full & ~mask)
            if c >= 2 and s * best_den < best_num * c:
                best_num = np.int64(s)
                best_den = np.int64(c)
                best_mask = mask
            i = s - 1
            while i >= 0 and idx[i] == n - s + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, s):
                idx[j] = idx[j - 1] + 1
    return 0, best_num, best_den, best_mask, work


@njit(cache=True)
def _violation_search(rows, n, b, budget):
    """First subset S (by size, then lexicographic) with c(G-S) >= b|S|+1.

    Returns (status, found, witness_mask, components, work).
    """
    full = (np.int64(1) << n) - 1
    work = np.int64(0)
    idx = np.zeros(n, dtype=np.int64)
    for s in range(1, n):
        if b * s + 1 > n - s:
            break  # fewer than b s + 1 vertices remain
        for i in range(s):
            idx[i] = i
        while True:
            work += 1
            if work > budget:
                return 1, False, np.int64(0), 0, work
            mask = np.int64(0)
            for i in range(s):
                mask |= np.int64(1) << idx[i]
            c = _count_components_masked(rows, n, full & ~mask)
            if c >= b * s + 1:
                return 0, True, mask, c, work
            i = s - 1
            while i >= 0 and idx[i] == n - s + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, s):
                idx[j] = idx[j - 1] + 1
    return 0, False, np.int64(0), 0, work


def _check_searchable(g: Graph) -> None:
    if g.is_complete():
        raise ToughnessUndefinedError(
            "toughness is undefined for complete graphs (no vertex cut exists)"
        )
    if not is_connected(g):
        raise ToughnessUndefinedError("toughness is undefined for disconnected graphs")
    if g.n > MAX_ORDER:
        raise BudgetExceededError(
            f"graph order n={g.n} exceeds the exact-search limit of {MAX_ORDER}"
        )


def _rows_array(g: Graph):
    return np.array(g.rows, dtype=np.int64)


def _mask_to_vertices(mask: int) -> tuple[int, ...]:
    mask = int(mask)
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def toughness_exact(g: Graph, budget: Optional[int] = None) -> ToughnessResult:
    """Exact toughness with the deterministic minimizing cut."""
    _check_searchable(g)
    cap = DEFAULT_SUBSET_BUDGET if budget is None else budget
    status, num, den, mask, _ = _toughness_search(_rows_array(g), g.n, cap)
    if status == 1:
        raise BudgetExceededError(f"toughness search exceeded budget of {cap} subsets")
    witness = _mask_to_vertices(mask)
    return ToughnessResult(Fraction(int(num), int(den)), witness, int(den))


def is_one_over_b_tough(g: Graph, b: int, budget: Optional[int] = None) -> ToughnessDecision:
    """Decide toughness >= 1/b by searching for a cut with c(G-S) >= b|S|+1."""
    if b < 1:
        raise ValueError("b must be a positive integer")
    _check_searchable(g)
    cap = DEFAULT_SUBSET_BUDGET if budget is None else budget
    status, found, mask, comps, _ = _violation_search(_rows_array(g), g.n, b, cap)
    if status == 1:
        raise BudgetExceededError(f"violation search exceeded budget of {cap} subsets")
    if found:
        return ToughnessDecision(False, _mask_to_vertices(mask), int(comps))
    return ToughnessDecision(True)


# -- component census -------------------------------------------------------


class CensusMode(str, Enum):
    """Which boundary-size cutoff selects the components to audit."""

    PHI_CENSUS = "phi_census"  # e(S, H) < ceil(d/b)
    PSI_CENSUS = "psi_census"  # e(S, H) <= d - b


@dataclass(frozen=True)
class CensusEntry:
    """Observed versus expected size and degree sum of one small-boundary component."""

    vertices: tuple[int, ...]
    n_h: int
    two_m_h: int
    boundary_edges: int
    expected_n_h: int
    expected_two_m_h: int

    @property
    def matches(self) -> bool:
        return self.n_h == self.expected_n_h and self.two_m_h == self.expected_two_m_h


def _expected_census(d: int, c: int, b: int, n_h: int, mode: CensusMode) -> tuple[int, int]:
    # A qualifying component of a d-regular graph must have d+2 vertices when
    # its order shares d's parity and d+1 otherwise; its degree sum is pinned
    # by which parities d, n_h and the cutoff parameter share.
    expected_n = d + 2 if n_h % 2 == d % 2 else d + 1
    if mode is CensusMode.PHI_CENSUS:
        if n_h % 2 == d % 2:
            expected_2m = d * (d + 2) - c + 2 if c % 2 == d % 2 else d * (d + 2) - c + 1
        else:
            expected_2m = d * (d + 1) - c + 2 if c % 2 == 0 else d * (d + 1) - c + 1
    else:
        if n_h % 2 == d % 2:
            expected_2m = d * (d + 2) - d + b + 1 if b % 2 == 1 else d * (d + 2) - d + b
        else:
            expected_2m = d * (d + 1) - d + b + 1 if n_h % 2 == b % 2 else d * (d + 1) - d + b
    return expected_n, expected_2m


def component_census(
    g: Graph, s: Iterable[int], p: ThresholdParams, mode: CensusMode
) -> list[CensusEntry]:
    """Audit the components of G-S whose boundary is below the mode's cutoff.

    For each such component the entry records order, degree sum, boundary
    edge count, and the values those quantities are forced to take in a
    d-regular graph whose qualifying components all have spectral radius
    at most the corresponding threshold.  Mismatches are diagnostic gold
    when a certification contradiction is suspected.
    """
    d = is_regular(g)
    if d is None:
        raise ValueError("component census requires a regular graph")
    cut = normalize_vertex_set(s, g.n)
    if not cut:
        raise ValueError("component census requires a non-empty cut")
    s_mask = 0
    for v in cut:
        s_mask |= 1 << v
    cutoff_ok = (
        (lambda e: e < p.c) if mode is CensusMode.PHI_CENSUS else (lambda e: e <= p.d - p.b)
    )

    alive = ((1 << g.n) - 1) & ~s_mask
    entries: list[CensusEntry] = []
    seen = 0
    for v in range(g.n):
        bit = 1 << v
        if not (alive & bit) or (seen & bit):
            continue
        comp = bit
        frontier = bit
        while frontier:
            reach = 0
            m = frontier
            while m:
                low = m & -m
                reach |= g.rows[low.bit_length() - 1]
                m ^= low
            frontier = reach & alive & ~comp
            comp |= frontier
        seen |= comp
        members = _mask_to_vertices(comp)
        boundary = sum((g.rows[u] & s_mask).bit_count() for u in members)
        if not cutoff_ok(boundary):
            continue
        n_h = len(members)
        two_m = sum((g.rows[u] & comp).bit_count() for u in members)
        exp_n, exp_2m = _expected_census(d, p.c, p.b, n_h, mode)
        entries.append(CensusEntry(members, n_h, two_m, boundary, exp_n, exp_2m))
    return entries
