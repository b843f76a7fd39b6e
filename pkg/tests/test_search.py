"""Exhaustive weight-tuple scan: ordering, thresholds, determinism, CSV."""

from __future__ import annotations

import math

import pytest

from crankspace.qseries import CrankSpec, iter_ck_slices
from crankspace.search import (
    DEFAULT_SCAN_BOUND,
    SearchResult,
    check_family_unimodality,
    check_first_gap_criterion,
    crank_space,
    default_thread_count,
    exhaustive_search,
    min_unimodal_threshold,
    results_to_csv,
)

from helpers import TABLE1_ROWS, TABLE1_SCAN_BOUND


class TestCrankSpace:
    def test_sizes_are_binomials(self):
        for k, r in ((3, 2), (4, 2), (5, 3), (6, 3)):
            assert sum(1 for _ in crank_space(k)) == math.comb(k, r)

    def test_row_order_is_frozen(self):
        assert [s.a for s in crank_space(3)] == [(2, 1), (3, 1), (3, 2)]
        assert [s.a for s in crank_space(4)] == [
            (2, 1), (3, 1), (4, 1), (3, 2), (4, 2), (4, 3),
        ]
        fives = [s.a for s in crank_space(5)]
        assert fives[0] == (3, 2, 1) and fives[-1] == (5, 4, 3)

    def test_row_order_matches_reference_table(self):
        generated = [
            (k, spec.a) for k in (3, 4, 5, 6) for spec in crank_space(k)
        ]
        assert generated == [(k, a) for k, a, _ in TABLE1_ROWS]

    def test_specs_are_inside_search_space(self):
        for k in (3, 4, 5, 6):
            for spec in crank_space(k):
                assert spec.in_search_space
                assert spec.k == k


class TestThresholdScan:
    def test_reference_spot_rows(self):
        assert min_unimodal_threshold(CrankSpec(3, (2, 1))).threshold == 7
        assert min_unimodal_threshold(CrankSpec(4, (4, 3))).threshold == 23
        assert min_unimodal_threshold(CrankSpec(6, (6, 5, 3))).threshold == 32

    def test_divergent_row(self):
        res = min_unimodal_threshold(CrankSpec(3, (3, 1)))
        assert res.threshold is None
        assert not res.eventually_unimodal
        assert res.largest_nonunimodal == res.n_hi - 1 == 74

    def test_threshold_invariant(self):
        res = min_unimodal_threshold(CrankSpec(3, (2, 1)), 40)
        slices = dict(iter_ck_slices(res.spec, 40))
        m = res.threshold
        assert m == 0 or not slices[m].is_unimodal()
        for n in range(m + 1, 40):
            assert slices[n].is_unimodal()

    def test_zero_threshold_means_unimodal_from_the_start(self):
        res = min_unimodal_threshold(CrankSpec(4, (2, 1)), 30)
        assert res.threshold == 1
        slices = dict(iter_ck_slices(res.spec, 30))
        assert all(slices[n].is_unimodal() for n in range(2, 30))

    def test_larger_bound_never_lowers_the_threshold(self):
        spec = CrankSpec(3, (2, 1))
        small = min_unimodal_threshold(spec, 20)
        large = min_unimodal_threshold(spec, TABLE1_SCAN_BOUND)
        assert small.threshold == large.threshold == 7

    def test_restart_can_flip_divergence_verdict(self):
        spec = CrankSpec(4, (4, 3))
        short = min_unimodal_threshold(spec, 20)
        full = min_unimodal_threshold(spec, TABLE1_SCAN_BOUND)
        assert not short.eventually_unimodal  # still failing at the horizon
        assert full.eventually_unimodal and full.threshold == 23
        assert full.threshold >= short.largest_nonunimodal

    def test_bound_validation(self):
        with pytest.raises(ValueError):
            min_unimodal_threshold(CrankSpec(3, (2, 1)), 1)

    def test_default_bound(self):
        assert DEFAULT_SCAN_BOUND == TABLE1_SCAN_BOUND == 75


class TestExhaustiveSearch:
    def test_row_count_and_order(self):
        results = exhaustive_search(3, 4, n_hi=30)
        assert [(r.spec.k, r.spec.a) for r in results] == [
            (k, a) for k, a, _ in TABLE1_ROWS if k in (3, 4)
        ]
        assert all(r.n_hi == 30 for r in results)

    def test_k_range_validation(self):
        with pytest.raises(ValueError):
            exhaustive_search(2, 6)
        with pytest.raises(ValueError):
            exhaustive_search(5, 4)

    def test_worker_count_does_not_change_results(self):
        serial = exhaustive_search(3, 4, n_hi=40, threads=1)
        pooled = exhaustive_search(3, 4, n_hi=40, threads=2)
        assert serial == pooled
        assert results_to_csv(serial) == results_to_csv(pooled)

    def test_csv_shape(self):
        rows = results_to_csv(exhaustive_search(3, 3, n_hi=75)).splitlines()
        assert rows[0] == "k,a_vector,threshold,n_hi"
        assert rows[1] == '3,"(2,1)",7,75'
        assert rows[2] == '3,"(3,1)",-,75'
        assert rows[3] == '3,"(3,2)",6,75'

    def test_result_json_roundtrip(self):
        for res in exhaustive_search(3, 3, n_hi=20):
            data = res.to_json_dict()
            assert SearchResult.from_json_dict(data) == res
            assert data["k"] == 3 and isinstance(data["a"], list)


class TestCriteria:
    def test_first_gap_criterion_on_small_slice(self):
        rep = check_first_gap_criterion(exhaustive_search(3, 4, n_hi=75))
        assert rep.status == "pass"
        assert "k in [3, 4]" in rep.range

    def test_family_scan_small_range(self):
        rep = check_family_unimodality(3, 6, n_hi=30)
        assert rep.status == "pass"
        assert "onsets" in rep.range

    def test_family_scan_includes_second_family_for_odd_k(self):
        rep = check_family_unimodality(7, 7, n_hi=30)
        assert rep.status == "pass"


class TestThreadConfig:
    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("CRANKSPACE_THREADS", "3")
        assert default_thread_count() == 3

    def test_env_rejects_nonpositive(self, monkeypatch):
        monkeypatch.setenv("CRANKSPACE_THREADS", "0")
        with pytest.raises(ValueError):
            default_thread_count()

    def test_fallback_is_positive(self, monkeypatch):
        monkeypatch.delenv("CRANKSPACE_THREADS", raising=False)
        assert default_thread_count() >= 1
