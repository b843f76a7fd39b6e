"""Verification suites for the rank/crank divisibility and unimodality claims.

Each suite re-derives one numeric claim from scratch over a caller-chosen
range and returns a Report: pass (clean), fail (a genuine violation of the
claim), or partial (the claim holds but informative findings outside its
stated range are attached).  Counterexample payloads carry enough parameters
to reproduce the violation, plus the offending polynomial where one exists.

Divisibility is always decided twice, by the residue-sum criterion and by
exact long division; a disagreement between the routes is itself reported as
a violation rather than silently resolved.

Default ranges are sized so each suite completes in well under five minutes
on one core.  Everything is exact integer arithmetic except the quarantined
floating-point asymptotic diagnostic at the bottom.
"""

from __future__ import annotations

import dataclasses
import math
import time
from typing import Iterable, Mapping

from . import partitions, qseries
from .cyclotomic import (
    NotDivisible,
    divides_negated,
    divides_standard,
    exact_quotient,
    phi,
)
from .laurent import LaurentPoly

RANK_MONOTONE_ONSET = 39
CRANK_UNIMODAL_ONSET = 44
FAMILY_A_ONSET = 15
FAMILY_B_ONSET = 24

STATUSES = ("pass", "fail", "partial")


class InvalidCase(ValueError):
    """Raised for congruence-case parameters the hypotheses do not admit."""


class HypothesisViolation(ValueError):
    """Raised when a suite is invoked outside its claim's hypotheses."""


@dataclasses.dataclass
class Counterexample:
    params: dict
    poly: LaurentPoly | None = None

    def to_json_dict(self) -> dict:
        return {
            "params": dict(self.params),
            "poly": self.poly.to_json_dict() if self.poly is not None else None,
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> Counterexample:
        poly = data.get("poly")
        return cls(dict(data["params"]), LaurentPoly.from_json_dict(poly) if poly else None)


@dataclasses.dataclass
class Report:
    claim_id: str
    range: str
    status: str
    counterexamples: list[Counterexample]
    elapsed_s: float

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}, got {self.status!r}")
        if self.status == "pass" and self.counterexamples:
            raise ValueError("a passing report must carry no counterexamples")
        if self.status != "pass" and not self.counterexamples:
            raise ValueError(f"a {self.status} report must carry counterexamples")

    def to_json_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "range": self.range,
            "status": self.status,
            "counterexamples": [c.to_json_dict() for c in self.counterexamples],
            "elapsed_s": self.elapsed_s,
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> Report:
        return cls(
            data["claim_id"],
            data["range"],
            data["status"],
            [Counterexample.from_json_dict(c) for c in data["counterexamples"]],
            float(data["elapsed_s"]),
        )


def _report(claim_id: str, range_note: str, violations: list[Counterexample],
            infos: list[Counterexample], t0: float) -> Report:
    status = "fail" if violations else ("partial" if infos else "pass")
    return Report(claim_id, range_note, status, violations + infos, time.perf_counter() - t0)


def _violation(kind: str, poly: LaurentPoly | None = None, **params) -> Counterexample:
    return Counterexample({"kind": kind, "within_claim": True, **params}, poly)


def _info(kind: str, poly: LaurentPoly | None = None, **params) -> Counterexample:
    return Counterexample({"kind": kind, "within_claim": False, **params}, poly)


def _dual_quotient(f: LaurentPoly, divisor: LaurentPoly, criterion: bool):
    """Run both divisibility routes; return (divisible, quotient, agree)."""
    try:
        q = exact_quotient(f, divisor)
        by_division = True
    except NotDivisible:
        q = None
        by_division = False
    return by_division, q, by_division == criterion


# -- modified rank / crank quotients -------------------------------------------


def verify_modified_rank(ell: int, n_max: int = 50) -> Report:
    """Modified rank polynomials on the progression ell*n + beta(ell).

    Claim: each is symmetric and divisible by Phi_ell with a non-negative
    quotient, and is unimodal once the size reaches the rank monotonicity
    onset (39).  Smaller sizes genuinely wobble near the center; those are
    expected, so they are tallied in the range note rather than reported
    as counterexamples.
    """
    t0 = time.perf_counter()
    violations: list[Counterexample] = []
    wobbles: list[int] = []
    beta = partitions.beta(ell)
    for n in range(n_max + 1):
        size = ell * n + beta
        f = partitions.modified_rank_poly(ell, n)
        crit = divides_standard(f, ell)
        divisible, q, agree = _dual_quotient(f, phi(ell), crit)
        if not agree:
            violations.append(_violation("route-disagreement", f, ell=ell, n=n))
            continue
        if not divisible:
            violations.append(_violation("not-divisible", f, ell=ell, n=n))
            continue
        if not q.is_nonnegative():
            violations.append(_violation("negative-quotient", q, ell=ell, n=n))
        if not f.is_symmetric():
            violations.append(_violation("not-symmetric", f, ell=ell, n=n))
        if not f.is_unimodal():
            if size >= RANK_MONOTONE_ONSET:
                violations.append(_violation("not-unimodal", f, ell=ell, n=n, size=size))
            else:
                wobbles.append(size)
    note = f"ell={ell}, n in [0, {n_max}] (sizes ell*n+{beta})"
    if wobbles:
        note += f"; non-unimodal below size {RANK_MONOTONE_ONSET} at sizes {wobbles}"
    return _report(f"conj1.1-part1-ell{ell}", note, violations, [], t0)


def verify_crank_squared(n_max: int = 99) -> Report:
    """Crank polynomials at 5n + 4 against Phi_5(z^2).

    Claim: each is divisible with a non-negative quotient.  The quotient is
    not symmetric by itself; z^4 times it is, and that normalization is
    checked.  Interior zero coefficients of the quotient are counted and
    surfaced in the range note (non-negativity, not strict positivity, is
    the claim).
    """
    t0 = time.perf_counter()
    violations: list[Counterexample] = []
    infos: list[Counterexample] = []
    divisor = phi(5, "squared")
    interior_zeros = 0
    for n in range(n_max + 1):
        N = 5 * n + 4
        f = partitions.crank_poly(N)
        crit = divides_standard(f, 5) and divides_negated(f, 5)
        divisible, q, agree = _dual_quotient(f, divisor, crit)
        if not agree:
            violations.append(_violation("route-disagreement", f, n=n, size=N))
            continue
        if not divisible:
            violations.append(_violation("not-divisible", f, n=n, size=N))
            continue
        if not q.is_nonnegative():
            violations.append(_violation("negative-quotient", q, n=n, size=N))
        if not q.shift(4).is_symmetric():
            violations.append(_violation("normalized-quotient-asymmetric", q, n=n, size=N))
        if any(c == 0 for c in q.coeffs):
            interior_zeros += 1
    note = (
        f"sizes 5n+4 <= {5 * n_max + 4}; "
        f"interior zeros in {interior_zeros} of {n_max + 1} quotients"
    )
    return _report("conj1.1-part2", note, violations, infos, t0)


def verify_modified_crank(ell: int, n_max: int | None = None) -> Report:
    """Modified crank polynomials on the progression ell*n + beta(ell).

    Claim: each is symmetric and divisible by Phi_ell with a non-negative
    quotient for ell in {5, 7, 11}, and is unimodal once the size reaches
    the crank monotonicity onset (44).  Below that onset the raw crank
    counts oscillate with parity near the center (e.g. the counts of 9
    run 3, 2, 3 around zero), so small sizes can fail unimodality while
    the quotient claim still holds; such sizes are tallied in the range
    note rather than reported as counterexamples.
    """
    if n_max is None:
        n_max = {5: 99, 7: 70, 11: 44}.get(ell, 40)
    t0 = time.perf_counter()
    violations: list[Counterexample] = []
    wobbles: list[int] = []
    beta = partitions.beta(ell)
    for n in range(n_max + 1):
        size = ell * n + beta
        f = partitions.modified_crank_poly(ell, n)
        crit = divides_standard(f, ell)
        divisible, q, agree = _dual_quotient(f, phi(ell), crit)
        if not agree:
            violations.append(_violation("route-disagreement", f, ell=ell, n=n))
            continue
        if not divisible:
            violations.append(_violation("not-divisible", f, ell=ell, n=n))
            continue
        if not q.is_nonnegative():
            violations.append(_violation("negative-quotient", q, ell=ell, n=n))
        if not f.is_symmetric():
            violations.append(_violation("not-symmetric", f, ell=ell, n=n))
        if not f.is_unimodal():
            if size >= CRANK_UNIMODAL_ONSET:
                violations.append(_violation("not-unimodal", f, ell=ell, n=n, size=size))
            else:
                wobbles.append(size)
    note = f"ell={ell}, n in [0, {n_max}] (sizes ell*n+{beta})"
    if wobbles:
        note += f"; non-unimodal below size {CRANK_UNIMODAL_ONSET} at sizes {wobbles}"
    return _report(f"conj1.1-part3-ell{ell}", note, violations, [], t0)


# -- rank monotonicity and crank columns ----------------------------------------


def verify_rank_monotonic(n_max: int = 200, n_lo: int = 1) -> Report:
    """Weak decrease of rank counts over the window 0 <= m <= n - 2.

    Checks N(m, n) >= N(m+1, n) for consecutive pairs inside the window
    (the count at m = n - 1 is the lone largest-part partition and sits
    above an empty class, so the window cannot extend further).  The claim
    starts at n >= 39; violations below that onset are reported
    informatively and the largest such n lands in the range note.
    """
    t0 = time.perf_counter()
    violations: list[Counterexample] = []
    infos: list[Counterexample] = []
    worst_below = None
    for n in range(n_lo, n_max + 1):
        f = partitions.rank_poly(n)
        for m in range(0, n - 2):
            a, b = f.coefficient(m), f.coefficient(m + 1)
            if a < b:
                if n >= RANK_MONOTONE_ONSET:
                    violations.append(_violation("rank-increase", n=n, m=m, lhs=a, rhs=b))
                else:
                    infos.append(_info("rank-increase", n=n, m=m, lhs=a, rhs=b))
                    worst_below = n
    note = f"n in [{n_lo}, {n_max}], claim onset n >= {RANK_MONOTONE_ONSET}"
    if worst_below is not None:
        note += f"; largest below-onset violation at n={worst_below}"
    return _report("conj1.3", note, violations, infos, t0)


def verify_crank_mod10(n_max: int = 99) -> Report:
    """Crank residue classes mod 10 at sizes 5n + 4.

    Claim: five times the count in class 2k + j mod 10 equals the count in
    class j mod 2, for j in {0, 1} and every k in 0..4.
    """
    t0 = time.perf_counter()
    violations: list[Counterexample] = []
    for n in range(n_max + 1):
        N = 5 * n + 4
        f = partitions.crank_poly(N)
        for j in (0, 1):
            whole = sum(c for i, c in enumerate(f.coeffs) if (f.lo + i) % 2 == j)
            for k in range(5):
                part = sum(c for i, c in enumerate(f.coeffs) if (f.lo + i) % 10 == 2 * k + j)
                if 5 * part != whole:
                    violations.append(
                        _violation("mod10-imbalance", n=n, size=N, j=j, k=k,
                                   lhs=5 * part, rhs=whole)
                    )
    return _report("thm2.2", f"sizes 5n+4 <= {5 * n_max + 4}", violations, [], t0)


def verify_crank_constancy(k_max: int = 10, n_max: int = 60) -> Report:
    """Stability of crank counts near the top: M(n-k, n) constant in n.

    Claim: for each fixed k, M(n-k, n) does not depend on n once
    n >= max(2k, 2), and the extreme columns are M(n-1, n) = 0 and
    M(n, n) = 1 from n = 2 on.
    """
    t0 = time.perf_counter()
    violations: list[Counterexample] = []
    for k in range(k_max + 1):
        start = max(2 * k, 2)
        if start > n_max:
            continue
        values = [partitions.crank_count(n - k, n) for n in range(start, n_max + 1)]
        const = values[0]
        for i, v in enumerate(values):
            if v != const:
                violations.append(
                    _violation("not-constant", k=k, n=start + i, value=v, expected=const)
                )
        if k == 0 and const != 1:
            violations.append(_violation("top-value", k=0, value=const, expected=1))
        if k == 1 and const != 0:
            violations.append(_violation("top-value", k=1, value=const, expected=0))
    return _report("lem2.4", f"k <= {k_max}, n <= {n_max}", violations, [], t0)


def verify_n22_gap() -> Report:
    """Named regression: the crank constancy gap at progression index 22.

    For ell in {5, 7, 11} and N = ell*22 + beta(ell), checks
    M(N-ell-1, N) - M(N-ell, N) - 1 >= 0, recomputed from the series.
    """
    t0 = time.perf_counter()
    violations: list[Counterexample] = []
    for ell in (5, 7, 11):
        N = ell * 22 + partitions.beta(ell)
        gap = partitions.crank_count(N - ell - 1, N) - partitions.crank_count(N - ell, N) - 1
        if gap < 0:
            violations.append(_violation("gap-negative", ell=ell, size=N, gap=gap))
    return _report("crank-n22-gap", "ell in {5,7,11}, n=22", violations, [], t0)


# -- colored congruences and quotients -------------------------------------------

_CLAUSES = (
    ((4, 8, 14), 3, 2),
    ((6, 10), 4, 3),
    ((26,), 12, 11),
)

H_VALUES = (4, 6, 8, 10, 14, 26)


def _clause_holds(h: int, ell: int) -> bool:
    return any(h in hs and ell % mod == res for hs, mod, res in _CLAUSES)


@dataclasses.dataclass(frozen=True)
class CongruenceCase:
    """One admissible colored congruence: ell | p_k(ell*n + delta).

    Requires k + h = ell * t for a prime ell >= 5 and one of the admissible
    (h, ell) residue clauses: h in {4,8,14} with ell = 2 mod 3, h in {6,10}
    with ell = 3 mod 4, or h = 26 with ell = 11 mod 12.  delta is the unique
    residue with 24*delta = k mod ell.
    """

    k: int
    h: int
    ell: int
    t: int
    delta: int

    @classmethod
    def make(cls, k: int, h: int, ell: int) -> CongruenceCase:
        if k < 1:
            raise InvalidCase(f"k must be >= 1, got {k}")
        if h not in H_VALUES:
            raise InvalidCase(f"h must be in {H_VALUES}, got {h}")
        if ell < 5 or math.gcd(ell, 24) != 1 or any(ell % d == 0 for d in range(2, ell)):
            raise InvalidCase(f"ell must be a prime >= 5, got {ell}")
        if (k + h) % ell != 0:
            raise InvalidCase(f"k + h = {k + h} is not a multiple of ell = {ell}")
        if not _clause_holds(h, ell):
            raise InvalidCase(f"(h={h}, ell={ell}) fits no admissible residue clause")
        return cls(k, h, ell, (k + h) // ell, partitions.delta(k, ell))


def enumerate_congruence_cases(k_max: int) -> list[CongruenceCase]:
    """All admissible cases with k <= k_max, ordered by (k, h, ell)."""
    cases = []
    for k in range(1, k_max + 1):
        for h in H_VALUES:
            s = k + h
            for ell in range(5, s + 1):
                if s % ell:
                    continue
                try:
                    cases.append(CongruenceCase.make(k, h, ell))
                except InvalidCase:
                    continue
    return cases


def verify_colored_congruence(case: CongruenceCase, n_max: int = 50) -> Report:
    """ell | p_k(ell*n + delta) for the given admissible case."""
    t0 = time.perf_counter()
    violations: list[Counterexample] = []
    for n in range(n_max + 1):
        size = case.ell * n + case.delta
        value = partitions.colored_count(case.k, size)
        if value % case.ell:
            violations.append(
                _violation("congruence", k=case.k, ell=case.ell, n=n, size=size,
                           residue=value % case.ell)
            )
    claim = f"thm1.2-k{case.k}-h{case.h}-ell{case.ell}"
    note = f"k={case.k}, h={case.h}, ell={case.ell}, delta={case.delta}, n in [0, {n_max}]"
    return _report(claim, note, violations, [], t0)


def _family_spec(kind: str, k: int) -> qseries.CrankSpec:
    if kind == "A":
        return qseries.ak_spec(k)
    if kind == "B":
        return qseries.bk_spec(k)
    raise HypothesisViolation(f"kind must be 'A' or 'B', got {kind!r}")


def _check_family_hypotheses(kind: str, case: CongruenceCase) -> int:
    """Validate the (kind, case) pairing; return the unimodality onset."""
    if kind == "A":
        banned = (14, 26) if case.k % 2 else (26,)
        if case.h in banned:
            raise HypothesisViolation(
                f"kind=A with k={case.k} excludes h in {banned}, got h={case.h}"
            )
        return FAMILY_A_ONSET
    if kind == "B":
        if case.k % 2 == 0 or case.k < 7:
            raise HypothesisViolation(f"kind=B needs odd k >= 7, got k={case.k}")
        if case.h not in (6, 14):
            raise HypothesisViolation(f"kind=B needs h in (6, 14), got h={case.h}")
        return FAMILY_B_ONSET
    raise HypothesisViolation(f"kind must be 'A' or 'B', got {kind!r}")


def verify_colored_quotients(kind: str, case: CongruenceCase, n_max: int | None = None) -> Report:
    """Cyclotomic divisibility of progression slices of a distinguished family.

    Claim: Phi_ell divides the q^(ell*n + delta) coefficient of the kind-A or
    kind-B product for every n in range (unconditional), and once the size
    reaches the family's unimodality onset the slice is unimodal and the
    quotient is non-negative.  Below-onset negative quotients or
    non-unimodal slices are expected for some small sizes; they are tallied
    in the range note rather than reported as counterexamples.
    """
    onset = _check_family_hypotheses(kind, case)
    spec = _family_spec(kind, case.k)
    if n_max is None:
        n_max = (300 - case.delta) // case.ell
    t0 = time.perf_counter()
    order = case.ell * n_max + case.delta
    sizes = [case.ell * n + case.delta for n in range(n_max + 1)]
    slices = qseries.ck_slices_at(spec, order, sizes)
    violations: list[Counterexample] = []
    wobbles: list[int] = []
    negatives: list[int] = []
    for n, size in enumerate(sizes):
        f = slices[size]
        crit = divides_standard(f, case.ell)
        divisible, q, agree = _dual_quotient(f, phi(case.ell), crit)
        if not agree:
            violations.append(_violation("route-disagreement", f, n=n, size=size))
            continue
        if not divisible:
            violations.append(_violation("not-divisible", f, n=n, size=size))
            continue
        if not f.is_symmetric():
            violations.append(_violation("not-symmetric", f, n=n, size=size))
        if not f.is_unimodal():
            if size >= onset:
                violations.append(_violation("not-unimodal", f, n=n, size=size))
            else:
                wobbles.append(size)
        if not q.is_nonnegative():
            if size >= onset:
                violations.append(_violation("negative-quotient", q, n=n, size=size))
            else:
                negatives.append(size)
    claim = f"cor3.5-{kind}-k{case.k}-ell{case.ell}"
    note = (
        f"kind={kind}, k={case.k}, ell={case.ell}, delta={case.delta}, "
        f"sizes <= {sizes[-1]}, onset {onset}"
    )
    if wobbles:
        note += f"; non-unimodal below onset at sizes {wobbles}"
    if negatives:
        note += f"; negative quotient below onset at sizes {negatives}"
    return _report(claim, note, violations, [], t0)


# -- floating-point diagnostic (quarantined) --------------------------------------


@dataclasses.dataclass(frozen=True)
class AsymptoticSample:
    """One comparison of N(m, n) against its sech^2 large-n approximation."""

    n: int
    m: int
    gamma: float
    predicted: float
    actual: int
    rel_error: float
    out_of_range: bool

    def to_json_dict(self) -> dict:
        return dataclasses.asdict(self)


def rank_asymptotic_samples(n: int, m_values: Iterable[int] | None = None) -> list[AsymptoticSample]:
    """Compare exact rank counts with (gamma/4) sech^2(gamma m / 2) p(n).

    gamma = pi / sqrt(6n).  The approximation is only claimed for
    |m| <= sqrt(n) log(n) / (pi sqrt(6)); samples outside that window are
    still computed but flagged out_of_range.  This is the package's only
    inexact computation.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    gamma = math.pi / math.sqrt(6 * n)
    window = math.sqrt(n) * math.log(n) / (math.pi * math.sqrt(6))
    if m_values is None:
        m_values = range(0, int(window) + 3)
    pn = float(partitions.partition_count(n))
    f = partitions.rank_poly(n)
    samples = []
    for m in m_values:
        sech = 1.0 / math.cosh(gamma * m / 2.0)
        predicted = (gamma / 4.0) * sech * sech * pn
        actual = f.coefficient(m)
        rel = abs(actual - predicted) / predicted
        samples.append(
            AsymptoticSample(n, m, gamma, predicted, actual, rel, abs(m) > window)
        )
    return samples
