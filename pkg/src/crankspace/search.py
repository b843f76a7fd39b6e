"""Exhaustive search for eventually unimodal colored-crank weight tuples.

The search space for a given color count k is every strictly decreasing
weight tuple drawn from {1..k}; for each tuple the q^n coefficients of its
product are scanned below a bound and the minimal m with "unimodal for all
m < n < n_hi" is recorded.  Two conjecture-level summaries sit on top: the
first-gap criterion (eventual unimodality iff the top two weights are
adjacent) and the distinguished families' unimodality onsets.

Work parallelizes over weight tuples with a multiprocessing pool; results
are merged in input order, so the output is byte-identical for any worker
count.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import itertools
import multiprocessing
import os
import time
from typing import Iterable, Iterator, Mapping

from . import qseries
from .qseries import CrankSpec
from .verify import (
    FAMILY_A_ONSET,
    FAMILY_B_ONSET,
    Counterexample,
    Report,
    _report,
    _violation,
)

DEFAULT_SCAN_BOUND = 75


def default_thread_count() -> int:
    """Worker count: the CRANKSPACE_THREADS variable, else the CPU count."""
    env = os.environ.get("CRANKSPACE_THREADS", "")
    if env.strip():
        count = int(env)
        if count < 1:
            raise ValueError(f"CRANKSPACE_THREADS must be >= 1, got {env!r}")
        return count
    return os.cpu_count() or 1


@dataclasses.dataclass(frozen=True)
class SearchResult:
    """Outcome of one weight tuple's unimodality scan below n_hi.

    threshold is the minimal m such that every slice with m < n < n_hi is
    unimodal (0 when all of them are), or None when the top slice itself is
    non-unimodal and no window remains.  eventually_unimodal mirrors that:
    the verdict only speaks for the scanned bound, which is why n_hi is
    carried along.  largest_nonunimodal is the largest non-unimodal n seen,
    None if every scanned slice was unimodal.
    """

    spec: CrankSpec
    n_hi: int
    threshold: int | None
    eventually_unimodal: bool
    largest_nonunimodal: int | None

    def to_json_dict(self) -> dict:
        return {
            "k": self.spec.k,
            "a": list(self.spec.a),
            "n_hi": self.n_hi,
            "threshold": self.threshold,
            "eventually_unimodal": self.eventually_unimodal,
            "largest_nonunimodal": self.largest_nonunimodal,
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> SearchResult:
        return cls(
            CrankSpec(data["k"], tuple(data["a"])),
            data["n_hi"],
            data["threshold"],
            data["eventually_unimodal"],
            data["largest_nonunimodal"],
        )


def crank_space(k: int) -> Iterator[CrankSpec]:
    """All strictly decreasing weight tuples from {1..k} of the length k needs.

    Ordered by ascending combination of the underlying set, each read
    largest-first — the order the reference tables use.
    """
    r = (k + k % 2) // 2
    for combo in itertools.combinations(range(1, k + 1), r):
        yield CrankSpec(k, tuple(reversed(combo)))


def min_unimodal_threshold(spec: CrankSpec, n_hi: int = DEFAULT_SCAN_BOUND) -> SearchResult:
    """Scan slices 1 <= n < n_hi and locate the last non-unimodal one."""
    if n_hi < 2:
        raise ValueError(f"n_hi must be >= 2, got {n_hi}")
    last_bad = None
    for n, f in qseries.iter_ck_slices(spec, n_hi):
        if n >= 1 and not f.is_unimodal():
            last_bad = n
    if last_bad == n_hi - 1:
        return SearchResult(spec, n_hi, None, False, last_bad)
    return SearchResult(spec, n_hi, last_bad or 0, True, last_bad)


def _pool_map(fn, tasks: list, threads: int | None) -> list:
    if threads is None:
        threads = default_thread_count()
    if threads <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with multiprocessing.Pool(min(threads, len(tasks))) as pool:
        return pool.map(fn, tasks)


def _threshold_task(task: tuple[CrankSpec, int]) -> SearchResult:
    spec, n_hi = task
    return min_unimodal_threshold(spec, n_hi)


def exhaustive_search(
    k_lo: int = 3,
    k_hi: int = 6,
    n_hi: int = DEFAULT_SCAN_BOUND,
    threads: int | None = None,
) -> list[SearchResult]:
    """Thresholds for every weight tuple with k_lo <= k <= k_hi.

    Results are ordered by k ascending, then by the tuple order of
    crank_space; the order and content do not depend on the worker count.
    """
    if not 3 <= k_lo <= k_hi:
        raise ValueError(f"need 3 <= k_lo <= k_hi, got [{k_lo}, {k_hi}]")
    specs = [spec for k in range(k_lo, k_hi + 1) for spec in crank_space(k)]
    return _pool_map(_threshold_task, [(spec, n_hi) for spec in specs], threads)


def results_to_csv(results: Iterable[SearchResult]) -> str:
    """Rows (k, a_vector, threshold, n_hi); '-' marks no threshold."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "a_vector", "threshold", "n_hi"])
    for r in results:
        a = "(" + ",".join(str(a) for a in r.spec.a) + ")"
        writer.writerow([r.spec.k, a, r.threshold if r.eventually_unimodal else "-", r.n_hi])
    return buf.getvalue()


def check_first_gap_criterion(results: Iterable[SearchResult]) -> Report:
    """Eventual unimodality iff the two largest weights are adjacent.

    Tests the equivalence on finished search results, in both directions;
    any mismatch is a counterexample.  A scan can only falsify the forward
    direction up to its bound, so the range note records the bounds used.
    """
    t0 = time.perf_counter()
    results = list(results)
    violations: list[Counterexample] = []
    for r in results:
        adjacent = len(r.spec.a) >= 2 and r.spec.a[0] - r.spec.a[1] == 1
        if r.eventually_unimodal and not adjacent:
            violations.append(
                _violation("unimodal-without-adjacent-pair", k=r.spec.k, a=list(r.spec.a),
                           threshold=r.threshold, n_hi=r.n_hi)
            )
        if adjacent and not r.eventually_unimodal:
            violations.append(
                _violation("adjacent-pair-not-unimodal", k=r.spec.k, a=list(r.spec.a),
                           largest_nonunimodal=r.largest_nonunimodal, n_hi=r.n_hi)
            )
    ks = sorted({r.spec.k for r in results})
    bounds = sorted({r.n_hi for r in results})
    note = f"{len(results)} weight tuples, k in {ks}, scan bounds {bounds}"
    return _report("conj4.2", note, violations, [], t0)


def _family_scan(task: tuple[str, int, int]) -> tuple[str, int, list[int], list[int]]:
    kind, k, n_hi = task
    spec = qseries.ak_spec(k) if kind == "A" else qseries.bk_spec(k)
    bad, asymmetric = [], []
    for n, f in qseries.iter_ck_slices(spec, n_hi):
        if n < 1:
            continue
        if not f.is_unimodal():
            bad.append(n)
        if not f.is_symmetric():
            asymmetric.append(n)
    return kind, k, bad, asymmetric


def check_family_unimodality(
    k_lo: int = 3,
    k_hi: int = 12,
    n_hi: int = 100,
    threads: int | None = None,
) -> Report:
    """Unimodality of the distinguished families above their onsets.

    Kind A is scanned for every k in [k_lo, k_hi] with onset 15; kind B for
    odd k >= 7 with onset 24.  Non-unimodal slices at or above the onset are
    violations; below-onset ones are expected for small sizes and are
    tallied in the range note.  Slices must be symmetric outright.
    """
    if not 3 <= k_lo <= k_hi:
        raise ValueError(f"need 3 <= k_lo <= k_hi, got [{k_lo}, {k_hi}]")
    t0 = time.perf_counter()
    tasks = [("A", k, n_hi) for k in range(k_lo, k_hi + 1)]
    tasks += [("B", k, n_hi) for k in range(max(k_lo, 7), k_hi + 1) if k % 2]
    violations: list[Counterexample] = []
    below_notes: list[str] = []
    for kind, k, bad, asymmetric in _pool_map(_family_scan, tasks, threads):
        onset = FAMILY_A_ONSET if kind == "A" else FAMILY_B_ONSET
        below = [n for n in bad if n < onset]
        for n in bad:
            if n >= onset:
                violations.append(_violation("not-unimodal", kind=kind, k=k, n=n))
        for n in asymmetric:
            violations.append(_violation("not-symmetric", kind=kind, k=k, n=n))
        if below:
            below_notes.append(f"{kind}{k} at {below}")
    note = (
        f"k in [{k_lo}, {k_hi}], 1 <= n < {n_hi}, "
        f"onsets A >= {FAMILY_A_ONSET}, B >= {FAMILY_B_ONSET} (B for odd k >= 7)"
    )
    if below_notes:
        note += "; below-onset non-unimodal: " + "; ".join(below_notes)
    return _report("conj1.4", note, violations, [], t0)
