"""Spectral certificates, corpus cross-validation, random regular generation."""

import pytest

from spectough import (
    CertReport,
    ContradictionError,
    TheoremChoice,
    ThresholdParams,
    Verdict,
    build_G1star,
    certify_thm3,
    certify_thm4,
    complete,
    cycle,
    disjoint_union,
    edgeless,
    from_edges,
    is_connected,
    is_one_over_b_tough,
    path,
    phi,
    random_regular,
    verify_on_corpus,
)


class TestVerdicts:
    def test_certified_cubic_example(self, petersen):
        rep = certify_thm3(petersen, 1)
        assert rep.verdict is Verdict.CERTIFIED
        assert rep.d == 3
        assert abs(rep.eigenvalue_used - 1.0) <= 1e-9
        assert abs(rep.threshold.value - 2.5615528128088303) <= 1e-12
        assert abs(rep.margin - (rep.threshold.value - rep.eigenvalue_used)) <= 1e-15

    def test_both_theorems_coincide_at_b_one(self, petersen):
        r3 = certify_thm3(petersen, 1)
        r4 = certify_thm4(petersen, 1)
        assert r3.verdict is r4.verdict is Verdict.CERTIFIED
        assert r3.threshold.value == r4.threshold.value
        assert r3.eigenvalue_used == r4.eigenvalue_used  # lambda_2 in both cases

    def test_small_cycle_certified(self):
        rep = certify_thm3(cycle(6), 1)
        assert rep.verdict is Verdict.CERTIFIED  # lambda_2 = 1 is below the cubic root

    def test_boundary_is_inconclusive(self):
        rep = certify_thm3(build_G1star(3, 1), 1)
        assert rep.verdict is Verdict.INCONCLUSIVE
        assert abs(rep.margin) <= 1e-9

    def test_above_threshold_is_inconclusive_not_a_claim(self):
        # a long even cycle is 1-tough although its lambda_2 exceeds the threshold
        g = cycle(18)
        rep = certify_thm3(g, 1)
        assert rep.verdict is Verdict.INCONCLUSIVE
        assert rep.margin < 0
        assert is_one_over_b_tough(g, 1).tough

    def test_not_regular(self):
        rep = certify_thm3(path(3), 1)
        assert rep.verdict is Verdict.NOT_APPLICABLE
        assert rep.detail == "not regular"

    def test_disconnected_checked_before_regularity(self):
        g = disjoint_union(cycle(3), cycle(3))  # 2-regular but disconnected
        rep = certify_thm3(g, 1)
        assert rep.verdict is Verdict.NOT_APPLICABLE
        assert rep.detail == "not connected"
        rep = certify_thm4(edgeless(5), 1)
        assert rep.detail == "not connected"

    def test_empty_graph(self):
        rep = certify_thm3(edgeless(0), 1)
        assert rep.verdict is Verdict.NOT_APPLICABLE

    def test_tail_eigenvalue_needs_enough_vertices(self):
        rep = certify_thm4(complete(3), 3)  # needs lambda_4 on 3 vertices
        assert rep.verdict is Verdict.NOT_APPLICABLE
        assert "4 vertices" in rep.detail

    def test_complete_graph_certifies(self):
        rep = certify_thm3(complete(4), 1)
        assert rep.verdict is Verdict.CERTIFIED  # lambda_2 = -1, far below

    def test_rejects_bad_b(self, petersen):
        with pytest.raises(ValueError, match="positive"):
            certify_thm3(petersen, 0)

    def test_record_form(self, petersen):
        rec = certify_thm3(petersen, 1).to_record()
        assert rec == {
            "theorem": "thm3",
            "b": "1",
            "verdict": "certified",
            "d": "3",
            "eigenvalue": "1",
            "threshold": "2.561552813",
            "branch": "odd_c",
            "margin": "1.561552813",
        }

    def test_enum_spellings(self):
        assert TheoremChoice.THM3.value == "thm3"
        assert TheoremChoice.THM4.value == "thm4"
        assert Verdict.CERTIFIED.value == "certified"
        assert Verdict.INCONCLUSIVE.value == "inconclusive"
        assert Verdict.NOT_APPLICABLE.value == "not_applicable"


class TestCorpus:
    def test_mixed_corpus_confirms(self, petersen):
        summary = verify_on_corpus([petersen, cycle(8), complete(4)], b=1, theorem=TheoremChoice.THM3)
        assert summary.total == 3
        assert summary.certified_confirmed == 3
        assert summary.contradictions == 0

    def test_boundary_graph_counts_inconclusive(self):
        summary = verify_on_corpus([build_G1star(3, 1)], b=1, theorem=TheoremChoice.THM3)
        assert summary.total == 1
        assert summary.inconclusive == 1
        assert summary.contradictions == 0

    def test_empty_corpus(self):
        summary = verify_on_corpus([], b=1, theorem=TheoremChoice.THM4)
        assert summary.total == 0
        assert summary.certified_confirmed == 0

    def test_not_applicable_counted(self):
        summary = verify_on_corpus([path(3)], b=1, theorem=TheoremChoice.THM3)
        assert summary.not_applicable == 1

    def test_contradiction_aborts(self, monkeypatch):
        # force a Certified verdict on a graph that is provably not 1-tough
        g = build_G1star(3, 1)
        honest = certify_thm3(g, 1)
        lie = CertReport(
            theorem=honest.theorem,
            b=honest.b,
            verdict=Verdict.CERTIFIED,
            d=honest.d,
            eigenvalue_used=honest.eigenvalue_used,
            threshold=honest.threshold,
            margin=honest.margin,
        )
        monkeypatch.setattr("spectough.certify.certify_thm3", lambda g, b: lie)
        with pytest.raises(ContradictionError) as exc:
            verify_on_corpus([g], b=1, theorem=TheoremChoice.THM3)
        err = exc.value
        assert err.decision.witness == (0, 1)
        assert len(err.census) == 3
        assert all(e.matches for e in err.census)
        assert "not 1/1-tough" in str(err)
        assert "census" in str(err)

    def test_summary_record(self, petersen):
        rec = verify_on_corpus([petersen], b=1, theorem=TheoremChoice.THM3).to_record()
        assert rec == {
            "total": "1",
            "certified_confirmed": "1",
            "inconclusive": "0",
            "not_applicable": "0",
            "contradictions": "0",
        }


class TestContradictionDiagnostics:
    def test_census_is_attached_for_regular_graphs(self):
        g = build_G1star(3, 1)
        report = CertReport(
            theorem=TheoremChoice.THM3,
            b=1,
            verdict=Verdict.CERTIFIED,
            d=3,
            eigenvalue_used=2.0,
            threshold=phi(ThresholdParams(3, 1)),
            margin=0.5,
        )
        decision = is_one_over_b_tough(g, 1)
        err = ContradictionError(g, report, decision)
        assert err.graph is g
        assert [e.n_h for e in err.census] == [4, 4, 4]
        assert "e(S,H)=2" in str(err)


class TestRandomRegular:
    def test_unique_cubic_graph_on_four_vertices(self):
        assert random_regular(4, 3, seed=0) == complete(4)
        assert random_regular(4, 3, seed=99).is_complete()

    def test_deterministic_for_fixed_seed(self):
        assert random_regular(10, 3, seed=1) == random_regular(10, 3, seed=1)

    def test_degree_postcondition(self):
        for seed in range(10):
            g = random_regular(12, 5, seed=seed)
            assert g.degrees() == (5,) * 12

    def test_two_regular_is_a_cycle_union(self):
        g = random_regular(6, 2, seed=5)
        assert g.degrees() == (2,) * 6

    def test_zero_degree(self):
        assert random_regular(5, 0, seed=0) == from_edges(5, [])

    def test_parity_rejected(self):
        with pytest.raises(ValueError, match="even"):
            random_regular(5, 3, seed=0)

    def test_degree_too_large_rejected(self):
        with pytest.raises(ValueError, match="impossible"):
            random_regular(4, 4, seed=0)

    def test_connected_draws_exist(self):
        # the harness relies on finding connected graphs within a few seeds
        assert any(is_connected(random_regular(10, 3, seed=s)) for s in range(5))
