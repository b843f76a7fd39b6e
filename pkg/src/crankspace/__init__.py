"""Exact integer-partition rank/crank statistics.

Laurent-polynomial and truncated q-series arithmetic over exact integers,
cyclotomic divisibility tests with verified quotients, verification suites
for the divisibility/positivity/unimodality claims in scope, and an
exhaustive threshold search over colored-crank weight tuples.
"""

from .cyclotomic import (
    Modulus,
    NotDivisible,
    divides_by_division,
    divides_negated,
    divides_standard,
    exact_quotient,
    hat_sum,
    phi,
)
from .laurent import LaurentPoly
from .partitions import (
    BoundExceeded,
    EmptyPartition,
    InvalidEll,
    beta,
    colored_count,
    crank_count,
    crank_of,
    crank_poly,
    delta,
    enumerate_partitions,
    modified_crank_poly,
    modified_rank_poly,
    partition_count,
    rank_count,
    rank_of,
    rank_poly,
)
from .qseries import (
    CrankSpec,
    InvalidK,
    QSeries,
    ak_spec,
    bk_spec,
    ck_series,
    ck_slices_at,
    crank_series_corrected,
    iter_ck_slices,
    rank_series,
)
from .search import (
    SearchResult,
    check_family_unimodality,
    check_first_gap_criterion,
    crank_space,
    exhaustive_search,
    min_unimodal_threshold,
    results_to_csv,
)
from .verify import (
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

__version__ = "0.1.0"

__all__ = [
    "AsymptoticSample",
    "BoundExceeded",
    "CongruenceCase",
    "Counterexample",
    "CrankSpec",
    "EmptyPartition",
    "HypothesisViolation",
    "InvalidCase",
    "InvalidEll",
    "InvalidK",
    "LaurentPoly",
    "Modulus",
    "NotDivisible",
    "QSeries",
    "Report",
    "SearchResult",
    "ak_spec",
    "beta",
    "bk_spec",
    "check_family_unimodality",
    "check_first_gap_criterion",
    "ck_series",
    "ck_slices_at",
    "colored_count",
    "crank_count",
    "crank_of",
    "crank_poly",
    "crank_series_corrected",
    "crank_space",
    "delta",
    "divides_by_division",
    "divides_negated",
    "divides_standard",
    "enumerate_congruence_cases",
    "enumerate_partitions",
    "exact_quotient",
    "exhaustive_search",
    "hat_sum",
    "iter_ck_slices",
    "min_unimodal_threshold",
    "modified_crank_poly",
    "modified_rank_poly",
    "partition_count",
    "phi",
    "rank_asymptotic_samples",
    "rank_count",
    "rank_of",
    "rank_poly",
    "rank_series",
    "results_to_csv",
    "verify_colored_congruence",
    "verify_colored_quotients",
    "verify_crank_constancy",
    "verify_crank_mod10",
    "verify_crank_squared",
    "verify_modified_crank",
    "verify_modified_rank",
    "verify_n22_gap",
    "verify_rank_monotonic",
]
