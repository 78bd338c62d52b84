"""Cubic root alpha_d and the piecewise thresholds phi and psi."""

import math

import pytest

from spectough import (
    Branch,
    Comparison,
    ThresholdParams,
    ThresholdValue,
    alpha_d,
    compare_with_tolerance,
    phi,
    psi,
)
from spectough.thresholds import ALPHA_ACCURACY


def cubic(d, x):
    return x**3 - (d - 2) * x**2 - 2 * d * x + (d - 1)


class TestParams:
    def test_ratio_ceiling(self):
        assert ThresholdParams(3, 1).c == 3
        assert ThresholdParams(5, 2).c == 3
        assert ThresholdParams(4, 3).c == 2
        assert ThresholdParams(7, 2).c == 4
        assert ThresholdParams(3, 5).c == 1

    def test_validation(self):
        with pytest.raises(ValueError, match="degree"):
            ThresholdParams(0, 1)
        with pytest.raises(ValueError, match="denominator"):
            ThresholdParams(3, 0)


class TestAlpha:
    def test_reference_values(self):
        # independently computed as the dominant real root of the cubic
        refs = {
            1: 1.0,
            2: 1.8608058531117,
            3: 2.8557725066359856,
            4: 3.8678159766871483,
            5: 4.880899120401379,
            7: 6.902355221426846,
            9: 8.917833620741494,
        }
        for d, ref in refs.items():
            assert abs(alpha_d(d) - ref) <= 1e-10, d

    def test_residual_small(self):
        for d in range(1, 41):
            assert abs(cubic(d, alpha_d(d))) < 1e-9

    def test_root_is_largest(self):
        # the cubic must be strictly positive beyond the returned root
        for d in (1, 2, 3, 5, 10, 25):
            a = alpha_d(d)
            assert cubic(d, a + 1e-6) > 0
            assert cubic(d, a + 1.0) > 0

    def test_bracket_for_large_d(self):
        for d in range(3, 100):
            a = alpha_d(d)
            assert d - 1 / (d + 2) - ALPHA_ACCURACY <= a <= d - 1 / (d + 4) + ALPHA_ACCURACY

    def test_monotone_in_d(self):
        vals = [alpha_d(d) for d in range(1, 30)]
        assert all(x < y for x, y in zip(vals, vals[1:]))

    def test_rejects_nonpositive_degree(self):
        with pytest.raises(ValueError):
            alpha_d(0)


class TestPhi:
    def test_odd_c_branch(self):
        t = phi(ThresholdParams(3, 1))
        assert t.branch is Branch.ODD_C
        assert t.value == (1 + math.sqrt(17)) / 2

    def test_even_c_even_d_branch(self):
        t = phi(ThresholdParams(4, 1))
        assert t.branch is Branch.EVEN_C_EVEN_D
        assert t.value == (2 + math.sqrt(28)) / 2

    def test_even_c_odd_d_branch(self):
        t = phi(ThresholdParams(7, 2))
        assert t.branch is Branch.EVEN_C_ODD_D
        assert t.value == (4 + math.sqrt(88)) / 2

    def test_small_c_falls_back_to_alpha(self):
        for d, b in [(4, 2), (3, 2), (3, 3), (5, 4), (2, 1)]:
            t = phi(ThresholdParams(d, b))
            assert t.branch is Branch.SMALL_C
            assert t.value == alpha_d(d)

    def test_depends_only_on_c(self):
        # b enters phi only through ceil(d/b)
        assert ThresholdParams(9, 3).c == ThresholdParams(9, 4).c == 3
        assert phi(ThresholdParams(9, 3)) == phi(ThresholdParams(9, 4))
        assert phi(ThresholdParams(6, 2)).value == (4 + math.sqrt(56)) / 2


class TestPsi:
    def test_same_parity_branch(self):
        t = psi(ThresholdParams(3, 1))
        assert t.branch is Branch.SAME_PARITY
        assert t.value == (1 + math.sqrt(17)) / 2
        t = psi(ThresholdParams(6, 2))
        assert t.branch is Branch.SAME_PARITY
        assert t.value == (4 + math.sqrt(48)) / 2

    def test_odd_d_even_b_branch(self):
        t = psi(ThresholdParams(5, 2))
        assert t.branch is Branch.ODD_D_EVEN_B
        assert t.value == (2 + math.sqrt(52)) / 2

    def test_even_d_odd_b_branch(self):
        t = psi(ThresholdParams(4, 1))
        assert t.branch is Branch.EVEN_D_ODD_B
        assert t.value == (2 + math.sqrt(28)) / 2

    def test_small_d_falls_back_to_alpha(self):
        for d, b in [(3, 2), (5, 4), (2, 1), (4, 3), (3, 7)]:
            t = psi(ThresholdParams(d, b))
            assert t.branch is Branch.SMALL_D
            assert t.value == alpha_d(d)


class TestStructure:
    def test_phi_equals_psi_at_b_one(self):
        for d in range(1, 61):
            p = ThresholdParams(d, 1)
            assert phi(p).value == psi(p).value, d

    def test_thresholds_bounded_by_alpha(self):
        for d in range(1, 41):
            a = alpha_d(d)
            for b in range(1, d + 1):
                p = ThresholdParams(d, b)
                assert phi(p).value <= a + 1e-9
                assert psi(p).value <= phi(p).value + 1e-9

    def test_branch_dispatch_total(self):
        # every parameter pair lands in exactly one branch without error
        phi_branches = set()
        psi_branches = set()
        for d in range(1, 51):
            for b in range(1, 51):
                p = ThresholdParams(d, b)
                phi_branches.add(phi(p).branch)
                psi_branches.add(psi(p).branch)
        assert phi_branches == {
            Branch.SMALL_C,
            Branch.ODD_C,
            Branch.EVEN_C_ODD_D,
            Branch.EVEN_C_EVEN_D,
        }
        assert psi_branches == {
            Branch.SMALL_D,
            Branch.SAME_PARITY,
            Branch.ODD_D_EVEN_B,
            Branch.EVEN_D_ODD_B,
        }


class TestComparison:
    def test_three_way(self):
        t = ThresholdValue(2.0, Branch.ODD_C)
        assert compare_with_tolerance(1.0, t) is Comparison.BELOW
        assert compare_with_tolerance(3.0, t) is Comparison.ABOVE
        assert compare_with_tolerance(2.0, t) is Comparison.BOUNDARY

    def test_boundary_band_is_symmetric(self):
        t = ThresholdValue(2.0, Branch.ODD_C)
        assert compare_with_tolerance(2.0 + 1e-10, t) is Comparison.BOUNDARY
        assert compare_with_tolerance(2.0 - 1e-10, t) is Comparison.BOUNDARY

    def test_custom_tolerance(self):
        t = ThresholdValue(2.0, Branch.ODD_C)
        assert compare_with_tolerance(1.9, t, tol=0.2) is Comparison.BOUNDARY
        assert compare_with_tolerance(1.9, t, tol=0.01) is Comparison.BELOW
