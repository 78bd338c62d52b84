"""Eigenvalue thresholds that certify 1/b-toughness of d-regular graphs.

Two piecewise thresholds are provided: phi(d, b) compared against the
second-largest adjacency eigenvalue, and psi(d, b) compared against the
(b+1)-st.  Both reduce to the cubic root alpha_d in their degenerate
branches and coincide at b = 1.  The branch that fired is always reported
alongside the value, because the strict-inequality certificates behave
differently at branch seams and the extremal families sit exactly on the
threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .spectral import TOL

#: Bisection accuracy for alpha_d.
ALPHA_ACCURACY = 1e-12


@dataclass(frozen=True)
class ThresholdParams:
    """Degree d, toughness denominator b, and the derived ratio c = ceil(d/b)."""

    d: int
    b: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("degree d must be a positive integer")
        if self.b < 1:
            raise ValueError("denominator b must be a positive integer")

    @property
    def c(self) -> int:
        return -(-self.d // self.b)


class Branch(str, Enum):
    """Which piecewise case produced a threshold value."""

    # phi branches, keyed on c = ceil(d/b)
    SMALL_C = "small_c_alpha"
    ODD_C = "odd_c"
    EVEN_C_ODD_D = "even_c_odd_d"
    EVEN_C_EVEN_D = "even_c_even_d"
    # psi branches, keyed on d versus b
    SMALL_D = "small_d_alpha"
    SAME_PARITY = "same_parity"
    ODD_D_EVEN_B = "odd_d_even_b"
    EVEN_D_ODD_B = "even_d_odd_b"


@dataclass(frozen=True)
class ThresholdValue:
    value: float
    branch: Branch


def _cubic(d: int, x: float) -> float:
    # x^3 - (d-2) x^2 - 2d x + (d-1), Horner form
    return ((x - (d - 2)) * x - 2 * d) * x + (d - 1)


def alpha_d(d: int) -> float:
    """Largest root of x^3 - (d-2)x^2 - 2dx + (d-1) = 0, to 1e-12.

    For d >= 3 the root lies in [d - 1/(d+2), d - 1/(d+4)]: the lower end
    is the average degree 2m/n of the (d+2)-vertex realizing graph, which
    its spectral radius strictly exceeds, and the cubic is positive at the
    upper end.  For d < 3 that window no longer brackets a sign change,
    but [1, d+1] does (the cubic is 2-2d <= 0 at x = 1 and d^2+5d+2 > 0
    at x = d+1), so bisection is run there instead.
    """
    if d < 1:
        raise ValueError("alpha_d requires d >= 1")
    if d >= 3:
        lo, hi = d - 1 / (d + 2), d - 1 / (d + 4)
    else:
        lo, hi = 1.0, float(d + 1)
    flo = _cubic(d, lo)
    if flo > 0 or _cubic(d, hi) < 0:
        raise ArithmeticError(f"bisection bracket failed for d={d}")
    while hi - lo > ALPHA_ACCURACY / 2:
        mid = (lo + hi) / 2
        if _cubic(d, mid) <= 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def phi(p: ThresholdParams) -> ThresholdValue:
    """Threshold for the second-largest eigenvalue test.

    Discriminants are assembled in integer arithmetic before the square
    root so that coincident branches (for example b = 1, where c = d)
    agree bit for bit with their closed forms.
    """
    d, c = p.d, p.c
    if c <= 2:
        return ThresholdValue(alpha_d(d), Branch.SMALL_C)
    if c % 2 == 1:
        return ThresholdValue(
            (d - 2 + math.sqrt(d * d + 4 * d + 8 - 4 * c)) / 2, Branch.ODD_C
        )
    if d % 2 == 1:
        return ThresholdValue(
            (d - 3 + math.sqrt(d * d + 6 * d + 13 - 4 * c)) / 2, Branch.EVEN_C_ODD_D
        )
    return ThresholdValue(
        (d - 2 + math.sqrt(d * d + 4 * d + 12 - 4 * c)) / 2, Branch.EVEN_C_EVEN_D
    )


def psi(p: ThresholdParams) -> ThresholdValue:
    """Threshold for the (b+1)-st eigenvalue test."""
    d, b = p.d, p.b
    if d <= b + 1:
        return ThresholdValue(alpha_d(d), Branch.SMALL_D)
    if d % 2 == b % 2:
        return ThresholdValue(
            (d - 2 + math.sqrt(d * d + 4 * b + 4)) / 2, Branch.SAME_PARITY
        )
    if d % 2 == 1:
        return ThresholdValue(
            (d - 3 + math.sqrt(d * d + 4 * b + 2 * d + 9)) / 2, Branch.ODD_D_EVEN_B
        )
    return ThresholdValue(
        (d - 2 + math.sqrt(d * d + 4 * b + 8)) / 2, Branch.EVEN_D_ODD_B
    )


class Comparison(str, Enum):
    BELOW = "below"
    BOUNDARY = "boundary"
    ABOVE = "above"


def compare_with_tolerance(x: float, threshold: ThresholdValue, tol: float = TOL) -> Comparison:
    """Strict-inequality comparison with a symmetric tolerance band.

    Anything within tol of the threshold is Boundary; the certifiers treat
    Boundary as inconclusive since the theorems need strict inequality and
    the sharpness constructions land exactly on the line.
    """
    if x < threshold.value - tol:
        return Comparison.BELOW
    if x > threshold.value + tol:
        return Comparison.ABOVE
    return Comparison.BOUNDARY
