"""Verification suites: report contracts, case admissibility, suite outcomes."""

from __future__ import annotations

import pytest

from crankspace.laurent import LaurentPoly
from crankspace.partitions import crank_count, rank_count
from crankspace.verify import (
    CRANK_UNIMODAL_ONSET,
    H_VALUES,
    RANK_MONOTONE_ONSET,
    STATUSES,
    AsymptoticSample,
    CongruenceCase,
    Counterexample,
    HypothesisViolation,
    InvalidCase,
    Report,
    enumerate_congruence_cases,
    rank_asymptotic_samples,
    verify_colored_congruence,
    verify_colored_quotients,
    verify_crank_constancy,
    verify_crank_mod10,
    verify_crank_squared,
    verify_modified_crank,
    verify_modified_rank,
    verify_n22_gap,
    verify_rank_monotonic,
)


class TestReportContract:
    def test_statuses_are_closed(self):
        assert STATUSES == ("pass", "fail", "partial")

    def test_pass_must_have_no_counterexamples(self):
        with pytest.raises(ValueError):
            Report("c", "n <= 3", "pass", [Counterexample({"n": 1})], 0.0)

    def test_fail_and_partial_need_counterexamples(self):
        for status in ("fail", "partial"):
            with pytest.raises(ValueError):
                Report("c", "n <= 3", status, [], 0.0)

    def test_unknown_status_rejected(self):
        with pytest.raises(ValueError):
            Report("c", "n <= 3", "maybe", [], 0.0)

    def test_json_roundtrip_with_poly(self):
        ce = Counterexample(
            params={"n": 9, "kind": "not-unimodal", "within_claim": False},
            poly=LaurentPoly(-1, (1, 2, 1)),
        )
        rep = Report("c1", "n <= 9", "partial", [ce], 1.25)
        data = rep.to_json_dict()
        back = Report.from_json_dict(data)
        assert back == rep
        assert data["counterexamples"][0]["poly"]["coeffs"] == ["1", "2", "1"]

    def test_json_roundtrip_without_poly(self):
        ce = Counterexample(params={"m": 2})
        rep = Report("c2", "all", "fail", [ce], 0.5)
        assert Report.from_json_dict(rep.to_json_dict()) == rep

    def test_elapsed_recorded(self):
        rep = verify_n22_gap()
        assert rep.elapsed_s >= 0.0
        assert rep.status == "pass"


class TestCongruenceCases:
    def test_known_case_fields(self):
        c = CongruenceCase.make(1, 4, 5)
        assert (c.k, c.h, c.ell, c.t, c.delta) == (1, 4, 5, 1, 4)

    def test_offset_is_scaled_inverse_of_24(self):
        for c in enumerate_congruence_cases(12):
            assert (24 * c.delta) % c.ell == c.k % c.ell
            assert (c.k + c.h) == c.ell * c.t

    def test_enumeration_is_complete_for_small_k(self):
        cases = enumerate_congruence_cases(12)
        assert len(cases) == 24
        triples = [(c.k, c.h, c.ell) for c in cases]
        assert triples == sorted(triples)
        for known in ((1, 4, 5), (6, 4, 5), (9, 14, 23), (11, 14, 5), (7, 26, 11)):
            assert known in triples

    @pytest.mark.parametrize(
        "k,h,ell,msg_part",
        [
            (3, 4, 7, "residue clause"),     # 7 is 1 mod 3, clause needs 2 mod 3
            (2, 4, 5, "multiple"),           # 6 is not a multiple of 5
            (1, 5, 6, "must be in"),         # 5 is not an admissible h
            (0, 4, 5, "k must be"),
            (1, 4, 10, "prime"),
            (4, 6, 5, "residue clause"),     # 5 is 1 mod 4, clause needs 3 mod 4
        ],
    )
    def test_inadmissible_cases_raise(self, k, h, ell, msg_part):
        with pytest.raises(InvalidCase, match=msg_part):
            CongruenceCase.make(k, h, ell)

    def test_h_universe(self):
        assert H_VALUES == (4, 6, 8, 10, 14, 26)

    def test_second_family_has_no_seven_color_case(self):
        # k=7 requires h in {6, 14}; both lead to inadmissible moduli,
        # so that corner of the parameter space is empty
        for h in H_VALUES:
            for ell in range(5, 7 + h + 1):
                try:
                    case = CongruenceCase.make(7, h, ell)
                except InvalidCase:
                    continue
                with pytest.raises(HypothesisViolation):
                    verify_colored_quotients("B", case, n_max=1)


class TestFamilyHypotheses:
    def test_first_family_rejects_large_h_for_odd_k(self):
        case = CongruenceCase.make(7, 26, 11)
        with pytest.raises(HypothesisViolation, match="excludes h"):
            verify_colored_quotients("A", case, n_max=1)

    def test_second_family_rejects_even_k(self):
        case = CongruenceCase.make(8, 6, 7)
        with pytest.raises(HypothesisViolation):
            verify_colored_quotients("B", case, n_max=1)

    def test_second_family_rejects_wrong_h(self):
        case = CongruenceCase.make(7, 26, 11)
        with pytest.raises(HypothesisViolation, match="needs h"):
            verify_colored_quotients("B", case, n_max=1)

    def test_kind_must_be_a_or_b(self):
        case = CongruenceCase.make(1, 4, 5)
        with pytest.raises(HypothesisViolation, match="kind"):
            verify_colored_quotients("c", case, n_max=1)


class TestSuitesOnSmallRanges:
    def test_modified_rank_passes_and_notes_small_wobbles(self):
        rep = verify_modified_rank(5, n_max=8)
        assert rep.status == "pass"
        assert "below size 39" in rep.range
        assert str(RANK_MONOTONE_ONSET) in rep.range

    def test_modified_crank_passes_and_notes_small_wobbles(self):
        rep = verify_modified_crank(5, n_max=10)
        assert rep.status == "pass"
        assert str(CRANK_UNIMODAL_ONSET) in rep.range

    def test_crank_squared_quotients(self):
        rep = verify_crank_squared(n_max=30)
        assert rep.status == "pass"
        assert "interior zeros" in rep.range

    def test_rank_monotonic_above_onset_passes(self):
        rep = verify_rank_monotonic(n_max=80, n_lo=RANK_MONOTONE_ONSET)
        assert rep.status == "pass"

    def test_rank_monotonic_from_one_is_partial_with_info_rows(self):
        rep = verify_rank_monotonic(n_max=40)
        assert rep.status == "partial"
        assert rep.counterexamples
        assert all(not ce.params["within_claim"] for ce in rep.counterexamples)
        worst = max(ce.params["n"] for ce in rep.counterexamples)
        assert worst == 38  # wobbles stop right before the onset

    def test_mod_ten_split(self):
        assert verify_crank_mod10(n_max=30).status == "pass"

    def test_extreme_tail_constancy(self):
        rep = verify_crank_constancy(k_max=6, n_max=40)
        assert rep.status == "pass"
        # the constants behind it: full columns at the tail
        assert crank_count(10, 10) == 1   # k = 0: only the single-row partition
        assert crank_count(9, 10) == 0    # k = 1: that gap is always empty

    def test_colored_congruence_case(self):
        case = CongruenceCase.make(1, 4, 5)
        rep = verify_colored_congruence(case, n_max=12)
        assert rep.status == "pass"
        assert rep.claim_id.endswith("k1-h4-ell5")

    def test_colored_quotients_small_instance(self):
        case = CongruenceCase.make(6, 4, 5)
        rep = verify_colored_quotients("A", case, n_max=6)
        assert rep.status == "pass"
        assert "onset" in rep.range


class TestAsymptotics:
    def test_sample_fields_and_serialization(self):
        samples = rank_asymptotic_samples(100)
        assert samples and isinstance(samples[0], AsymptoticSample)
        first = samples[0]
        assert first.n == 100 and first.m == 0
        assert first.actual == rank_count(0, 100)
        data = first.to_json_dict()
        assert set(data) >= {"n", "m", "gamma", "predicted", "actual", "rel_error"}

    def test_error_shrinks_with_n(self):
        e100 = rank_asymptotic_samples(100, m_values=[0])[0].rel_error
        e400 = rank_asymptotic_samples(400, m_values=[0])[0].rel_error
        assert e400 < e100 < 0.05

    def test_out_of_range_flag(self):
        samples = rank_asymptotic_samples(50, m_values=[0, 40])
        by_m = {s.m: s for s in samples}
        assert not by_m[0].out_of_range
        assert by_m[40].out_of_range

    def test_prediction_is_positive_and_symmetric_in_m(self):
        plus, minus = rank_asymptotic_samples(60, m_values=[3, -3])
        assert plus.predicted == minus.predicted > 0
