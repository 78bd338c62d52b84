"""Spectral certificates of 1/b-toughness, with exact cross-validation.

Two one-directional certificates are implemented for connected d-regular
graphs: the second-largest eigenvalue against phi(d, b), and the (b+1)-st
eigenvalue against psi(d, b).  A verdict of Certified means the strict
inequality holds with margin beyond tolerance and the graph is guaranteed
1/b-tough; anything at or above the threshold is Inconclusive, never a
claim of non-toughness.  The corpus verifier replays every Certified
verdict against the exact solver and treats a disagreement as fatal,
dumping the small-boundary component census of the violating cut.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .graph import Graph, from_edges, is_connected, is_regular
from .spectral import TOL, eigenvalues
from .thresholds import (
    Comparison,
    ThresholdParams,
    ThresholdValue,
    compare_with_tolerance,
    phi,
    psi,
)
from .toughness import (
    CensusMode,
    ToughnessDecision,
    component_census,
    is_one_over_b_tough,
)


class TheoremChoice(str, Enum):
    """Which certificate to apply (CLI spelling: --theorem 3 or 4)."""

    THM3 = "thm3"
    THM4 = "thm4"


class Verdict(str, Enum):
    CERTIFIED = "certified"
    INCONCLUSIVE = "inconclusive"
    NOT_APPLICABLE = "not_applicable"


class ContradictionError(RuntimeError):
    """A Certified graph failed the exact toughness test.

    Either the implementation is wrong or the certificate itself is; both
    demand a halt.  Carries the graph, the report, the violating cut, and
    the component census of that cut for diagnosis.
    """

    def __init__(self, graph: Graph, report: "CertReport", decision: ToughnessDecision):
        self.graph = graph
        self.report = report
        self.decision = decision
        mode = (
            CensusMode.PHI_CENSUS
            if report.theorem is TheoremChoice.THM3
            else CensusMode.PSI_CENSUS
        )
        self.census = (
            component_census(
                graph,
                decision.witness,
                ThresholdParams(report.d, report.b),
                mode,
            )
            if decision.witness and report.d is not None
            else []
        )
        lines = [
            f"certified graph is not 1/{report.b}-tough",
            f"  theorem={report.theorem.value} d={report.d} b={report.b}",
            f"  eigenvalue={report.eigenvalue_used!r} threshold={report.threshold!r}",
            f"  violating cut S={list(decision.witness or ())} "
            f"components={decision.component_count}",
        ]
        for e in self.census:
            lines.append(
                f"  census: |H|={e.n_h} (expected {e.expected_n_h}), "
                f"2m={e.two_m_h} (expected {e.expected_two_m_h}), "
                f"e(S,H)={e.boundary_edges}, match={e.matches}"
            )
        super().__init__("\n".join(lines))


@dataclass(frozen=True)
class CertReport:
    theorem: TheoremChoice
    b: int
    verdict: Verdict
    d: Optional[int] = None
    eigenvalue_used: Optional[float] = None
    threshold: Optional[ThresholdValue] = None
    margin: Optional[float] = None
    cross_check: Optional[str] = None
    detail: str = ""

    def to_record(self) -> dict[str, str]:
        """Stable key-value form for the structured output mode."""
        rec = {
            "theorem": self.theorem.value,
            "b": str(self.b),
            "verdict": self.verdict.value,
        }
        if self.d is not None:
            rec["d"] = str(self.d)
        if self.eigenvalue_used is not None:
            rec["eigenvalue"] = f"{self.eigenvalue_used:.10g}"
        if self.threshold is not None:
            rec["threshold"] = f"{self.threshold.value:.10g}"
            rec["branch"] = self.threshold.branch.value
        if self.margin is not None:
            rec["margin"] = f"{self.margin:.10g}"
        if self.cross_check is not None:
            rec["cross_check"] = self.cross_check
        if self.detail:
            rec["detail"] = self.detail
        return rec


def _not_applicable(theorem: TheoremChoice, b: int, reason: str) -> CertReport:
    return CertReport(theorem, b, Verdict.NOT_APPLICABLE, detail=reason)


def _certify(g: Graph, b: int, theorem: TheoremChoice) -> CertReport:
    if b < 1:
        raise ValueError("b must be a positive integer")
    if g.n == 0:
        return _not_applicable(theorem, b, "empty graph")
    if not is_connected(g):
        return _not_applicable(theorem, b, "not connected")
    d = is_regular(g)
    if d is None:
        return _not_applicable(theorem, b, "not regular")
    k = 2 if theorem is TheoremChoice.THM3 else b + 1
    if g.n < k:
        return _not_applicable(theorem, b, f"needs at least {k} vertices")
    spec = eigenvalues(g)
    params = ThresholdParams(d, b)
    threshold = phi(params) if theorem is TheoremChoice.THM3 else psi(params)
    value = spec.lambda_k(k)
    verdict = (
        Verdict.CERTIFIED
        if compare_with_tolerance(value, threshold) is Comparison.BELOW
        else Verdict.INCONCLUSIVE
    )
    return CertReport(
        theorem=theorem,
        b=b,
        verdict=verdict,
        d=d,
        eigenvalue_used=value,
        threshold=threshold,
        margin=threshold.value - value,
    )


def certify_thm3(g: Graph, b: int) -> CertReport:
    """Certify toughness >= 1/b from the second-largest eigenvalue."""
    return _certify(g, b, TheoremChoice.THM3)


def certify_thm4(g: Graph, b: int) -> CertReport:
    """Certify toughness >= 1/b from the (b+1)-st eigenvalue."""
    return _certify(g, b, TheoremChoice.THM4)


@dataclass
class CorpusSummary:
    total: int = 0
    certified_confirmed: int = 0
    inconclusive: int = 0
    not_applicable: int = 0
    contradictions: int = 0  # always 0 on normal return; kept for the record

    def to_record(self) -> dict[str, str]:
        return {
            "total": str(self.total),
            "certified_confirmed": str(self.certified_confirmed),
            "inconclusive": str(self.inconclusive),
            "not_applicable": str(self.not_applicable),
            "contradictions": str(self.contradictions),
        }


def verify_on_corpus(
    graphs: Iterable[Graph],
    b: int,
    theorem: TheoremChoice,
    budget: Optional[int] = None,
) -> CorpusSummary:
    """Certify each graph; replay every Certified verdict against the solver.

    Raises ContradictionError if any certified graph fails the exact
    1/b-toughness test.  Complete graphs have no vertex cut at all, so a
    Certified verdict on one is confirmed vacuously.
    """
    summary = CorpusSummary()
    certify = certify_thm3 if theorem is TheoremChoice.THM3 else certify_thm4
    for g in graphs:
        summary.total += 1
        report = certify(g, b)
        if report.verdict is Verdict.NOT_APPLICABLE:
            summary.not_applicable += 1
        elif report.verdict is Verdict.INCONCLUSIVE:
            summary.inconclusive += 1
        else:
            if g.is_complete():
                summary.certified_confirmed += 1
                continue
            decision = is_one_over_b_tough(g, b, budget=budget)
            if not decision.tough:
                summary.contradictions += 1
                raise ContradictionError(g, report, decision)
            summary.certified_confirmed += 1
    return summary


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Random simple d-regular graph via the pairing model.

    Stubs are shuffled and paired; draws with loops or repeated edges are
    rejected and retried with the same generator, up to a fixed attempt
    cap.  Deterministic for a fixed seed.  Uniformity is approximate,
    which is all the corpus harness needs.
    """
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")
    if d >= max(n, 1):
        raise ValueError(f"degree d={d} impossible on {n} vertices")
    if (n * d) % 2 == 1:
        raise ValueError("n*d must be even")
    if d == 0:
        return from_edges(n, [])
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(10_000):
        rng.shuffle(stubs)
        seen: set[tuple[int, int]] = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            key = (u, v) if u < v else (v, u)
            if key in seen:
                ok = False
                break
            seen.add(key)
        if ok:
            return from_edges(n, sorted(seen))
    raise RuntimeError(
        f"pairing model failed to produce a simple graph in 10000 attempts (n={n}, d={d})"
    )
