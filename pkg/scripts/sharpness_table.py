#!/usr/bin/env python3
"""Tabulate lambda_2 against phi(d, b) for every feasible extremal family.

For each buildable family with d <= max_d this prints the second adjacency
eigenvalue next to the matching threshold branch, the gap between them, and
the exact toughness (or a violating cut when the graph is too large for the
exact solver).  A healthy table shows gaps at rounding level and toughness
strictly below 1/b throughout.
"""

from __future__ import annotations

import argparse

from spectough import (
    Family,
    ThresholdParams,
    build_family,
    hub_size,
    feasible_star_parameters,
    is_one_over_b_tough,
    lambda_k,
    phi,
    toughness_exact,
)

EXACT_LIMIT = 24


def describe_toughness(g, d: int, b: int, family: Family) -> str:
    if g.n <= EXACT_LIMIT:
        result = toughness_exact(g)
        status = "<" if result.tau < 1 / b else ">="
        return f"tau = {result.tau} {status} 1/{b}"
    hub = tuple(range(hub_size(family, d, b)))
    decision = is_one_over_b_tough(g, b)
    assert not decision.tough, "extremal graph unexpectedly 1/b-tough"
    return (
        f"not 1/{b}-tough: |S| = {len(decision.witness)}, "
        f"c(G-S) = {decision.component_count} (hub size {len(hub)})"
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-d", type=int, default=7)
    args = parser.parse_args()

    header = f"{'family':8} {'d':>2} {'b':>2} {'n':>4} {'lambda_2':>18} {'phi':>18} {'gap':>10}  toughness"
    print(header)
    print("-" * len(header))
    for family, d, b in feasible_star_parameters(args.max_d):
        g = build_family(family, d, b)
        lam = lambda_k(g, 2)
        threshold = phi(ThresholdParams(d, b))
        gap = lam - threshold.value
        tough_note = describe_toughness(g, d, b, family)
        print(
            f"{family.value:8} {d:>2} {b:>2} {g.n:>4} {lam:>18.12f} "
            f"{threshold.value:>18.12f} {gap:>10.2e}  {tough_note}"
        )


if __name__ == "__main__":
    main()
