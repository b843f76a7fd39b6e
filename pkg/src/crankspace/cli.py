"""Command-line frontend for the partition-statistic engine.

Subcommands:
  poly       print a rank/crank polynomial (raw or modified) for one size
  quotient   divide a polynomial by a cyclotomic divisor
  verify     run one claim suite (or `all`), reporting pass/fail/partial
  search     threshold search over weight tuples; `search table1` preset
  colored    colored partition counts
  asymptotic exact-vs-approximation diagnostic for rank counts

Output formats: text (default), json, csv.  Exit codes: 0 = computed or all
claims passed (partial counts as passing: the claim held in its stated
range), 1 = a checked claim failed, 2 = usage error.  Worker count comes
from --threads, else the CRANKSPACE_THREADS variable, else the CPU count;
the worker count never changes output bytes.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Callable, Sequence

from . import partitions, qseries, search, verify
from .cyclotomic import NotDivisible, exact_quotient, phi
from .laurent import LaurentPoly

_POLY_SHORTHAND = re.compile(r"^(rank|crank|mrank|mcrank):(\d+)(?::(\d+))?$")
_THM12_ID = re.compile(r"^thm1\.2-k(\d+)-h(\d+)-ell(\d+)$")
_COR35_ID = re.compile(r"^cor3\.5-([AB])-k(\d+)-ell(\d+)$")

COR35_DEFAULT_INSTANCES = (("A", 6, 5), ("B", 9, 23), ("B", 11, 5))


class UsageError(Exception):
    pass


# -- claim registry -------------------------------------------------------------


def _run_part1(args) -> list[verify.Report]:
    ells = [args.ell] if args.ell else [5, 7]
    return [verify.verify_modified_rank(e, args.n_max if args.n_max is not None else 50)
            for e in ells]


def _run_part2(args) -> list[verify.Report]:
    return [verify.verify_crank_squared(args.n_max if args.n_max is not None else 99)]


def _run_part3(args) -> list[verify.Report]:
    ells = [args.ell] if args.ell else [5, 7, 11]
    return [verify.verify_modified_crank(e, args.n_max) for e in ells]


def _run_monotonic(args) -> list[verify.Report]:
    return [verify.verify_rank_monotonic(
        args.n_max if args.n_max is not None else 200, args.n_lo)]


def _run_mod10(args) -> list[verify.Report]:
    return [verify.verify_crank_mod10(args.n_max if args.n_max is not None else 99)]


def _run_constancy(args) -> list[verify.Report]:
    return [verify.verify_crank_constancy(n_max=args.n_max if args.n_max is not None else 60)]


def _run_n22(args) -> list[verify.Report]:
    return [verify.verify_n22_gap()]


def _run_congruences(args) -> list[verify.Report]:
    n_max = args.n_max if args.n_max is not None else 50
    return [verify.verify_colored_congruence(case, n_max)
            for case in verify.enumerate_congruence_cases(12)]


def _cor35_case(kind: str, k: int, ell: int) -> verify.CongruenceCase:
    """Resolve (kind, k, ell) to an admissible case, smallest valid h."""
    for h in verify.H_VALUES:
        try:
            case = verify.CongruenceCase.make(k, h, ell)
            verify._check_family_hypotheses(kind, case)
            return case
        except (verify.InvalidCase, verify.HypothesisViolation):
            continue
    raise UsageError(f"no admissible progression for kind={kind}, k={k}, ell={ell}")


def _run_quotient_instances(args) -> list[verify.Report]:
    return [verify.verify_colored_quotients(kind, _cor35_case(kind, k, ell), args.n_max)
            for kind, k, ell in COR35_DEFAULT_INSTANCES]


def _run_family_unimodality(args) -> list[verify.Report]:
    n_hi = (args.n_max + 1) if args.n_max is not None else 100
    return [search.check_family_unimodality(3, 12, n_hi, threads=args.threads)]


def _run_first_gap(args) -> list[verify.Report]:
    n_hi = (args.n_max + 1) if args.n_max is not None else 75
    results = search.exhaustive_search(3, 6, n_hi, threads=args.threads)
    return [search.check_first_gap_criterion(results)]


CLAIMS: list[tuple[str, str, Callable]] = [
    ("conj1.1-part1", "modified rank: cyclotomic quotient non-negative (ell=5,7)", _run_part1),
    ("conj1.1-part2", "crank at 5n+4: quotient by squared-argument divisor non-negative", _run_part2),
    ("conj1.1-part3", "modified crank: cyclotomic quotient non-negative (ell=5,7,11)", _run_part3),
    ("conj1.3", "rank counts weakly decreasing over the window (onset 39)", _run_monotonic),
    ("thm2.2", "crank residue classes mod 10 at 5n+4 are 1/5 of the mod-2 classes", _run_mod10),
    ("lem2.4", "near-top crank counts M(n-k, n) are constant in n", _run_constancy),
    ("crank-n22-gap", "named regression: constancy gap at progression index 22", _run_n22),
    ("thm1.2", "colored congruences, all admissible cases with k <= 12", _run_congruences),
    ("cor3.5", "distinguished-family slices: divisibility and onset positivity", _run_quotient_instances),
    ("conj1.4", "distinguished families unimodal above onsets 15/24 (k <= 12)", _run_family_unimodality),
    ("conj4.2", "eventual unimodality iff the top two weights are adjacent (k <= 6)", _run_first_gap),
]

CLAIM_INDEX = {claim_id: (desc, fn) for claim_id, desc, fn in CLAIMS}

VARIANT_IDS = {
    "conj1.1-part1-ell5": ("conj1.1-part1", 5),
    "conj1.1-part1-ell7": ("conj1.1-part1", 7),
    "conj1.1-part3-ell5": ("conj1.1-part3", 5),
    "conj1.1-part3-ell7": ("conj1.1-part3", 7),
    "conj1.1-part3-ell11": ("conj1.1-part3", 11),
}


def resolve_claim(claim_id: str, args) -> list[verify.Report]:
    if claim_id in CLAIM_INDEX:
        args.ell = None
        return CLAIM_INDEX[claim_id][1](args)
    if claim_id in VARIANT_IDS:
        group, ell = VARIANT_IDS[claim_id]
        args.ell = ell
        return CLAIM_INDEX[group][1](args)
    match = _THM12_ID.match(claim_id)
    if match:
        k, h, ell = map(int, match.groups())
        try:
            case = verify.CongruenceCase.make(k, h, ell)
        except verify.InvalidCase as exc:
            raise UsageError(str(exc)) from exc
        return [verify.verify_colored_congruence(
            case, args.n_max if args.n_max is not None else 50)]
    match = _COR35_ID.match(claim_id)
    if match:
        kind, k, ell = match.group(1), int(match.group(2)), int(match.group(3))
        return [verify.verify_colored_quotients(kind, _cor35_case(kind, k, ell), args.n_max)]
    raise UsageError(f"unknown claim id {claim_id!r} (try `verify --list`)")


# -- output rendering -----------------------------------------------------------


def _poly_brief(poly: LaurentPoly | None) -> str | None:
    if poly is None:
        return None
    text = str(poly)
    if len(text) > 100:
        return f"<{len(poly.coeffs)} coefficients on [{poly.lo}, {poly.hi}]>"
    return text


def _render_reports(reports: list[verify.Report], fmt: str, out) -> None:
    if fmt == "json":
        payload = [r.to_json_dict() for r in reports]
        json.dump(payload[0] if len(payload) == 1 else payload, out, indent=2)
        out.write("\n")
        return
    if fmt == "csv":
        out.write("claim_id,status,range,counterexamples,elapsed_s\n")
        for r in reports:
            note = r.range.replace('"', "'")
            out.write(f'{r.claim_id},{r.status},"{note}",{len(r.counterexamples)},{r.elapsed_s:.3f}\n')
        return
    for r in reports:
        out.write(f"{r.claim_id}: {r.status.upper()} ({r.range}) [{r.elapsed_s:.2f}s]\n")
        shown = r.counterexamples[:10]
        for c in shown:
            line = f"  - {c.params}"
            brief = _poly_brief(c.poly)
            if brief is not None:
                line += f" poly={brief}"
            out.write(line + "\n")
        if len(r.counterexamples) > len(shown):
            out.write(f"  ... and {len(r.counterexamples) - len(shown)} more\n")


def _render_poly(poly: LaurentPoly, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(poly.to_json_dict(), out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        out.write("exponent,coefficient\n")
        for e, c in sorted(poly.coeff_map().items()):
            out.write(f"{e},{c}\n")
    else:
        out.write(str(poly) + "\n")


# -- subcommand handlers ----------------------------------------------------------


def _cmd_poly(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    if args.kind in ("modified-rank", "modified-crank"):
        if args.ell is None:
            raise UsageError(f"poly {args.kind} requires --ell")
        builder = (partitions.modified_rank_poly if args.kind == "modified-rank"
                   else partitions.modified_crank_poly)
        poly = builder(args.ell, args.n)
    else:
        if args.ell is not None:
            raise UsageError(f"poly {args.kind} does not take --ell")
        builder = partitions.rank_poly if args.kind == "rank" else partitions.crank_poly
        poly = builder(args.n)
    _render_poly(poly, args.format, out)
    return 0


def _parse_poly_arg(text: str) -> LaurentPoly:
    match = _POLY_SHORTHAND.match(text.strip())
    if match:
        kind, first, second = match.group(1), int(match.group(2)), match.group(3)
        if kind in ("rank", "crank"):
            if second is not None:
                raise UsageError(f"{kind}:N takes a single number, got {text!r}")
            return partitions.rank_poly(first) if kind == "rank" else partitions.crank_poly(first)
        if second is None:
            raise UsageError(f"{kind} shorthand is {kind}:ELL:N, got {text!r}")
        builder = partitions.modified_rank_poly if kind == "mrank" else partitions.modified_crank_poly
        return builder(first, int(second))
    try:
        return LaurentPoly.from_text(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse polynomial {text!r}: {exc}") from exc


def _cmd_quotient(args, out) -> int:
    if args.squared and args.negated:
        raise UsageError("--squared and --negated are mutually exclusive")
    variant = "squared" if args.squared else ("negated" if args.negated else "standard")
    f = _parse_poly_arg(args.poly)
    divisor = phi(args.ell, variant)
    try:
        quotient = exact_quotient(f, divisor)
    except NotDivisible as exc:
        if args.format == "json":
            json.dump({"divisible": False, "quotient": None, "reason": str(exc)}, out, indent=2)
            out.write("\n")
        elif args.format == "csv":
            out.write("divisible\nfalse\n")
        else:
            out.write(f"NotDivisible: {exc}\n")
        return 0
    if args.format == "json":
        json.dump({"divisible": True, "quotient": quotient.to_json_dict()}, out, indent=2)
        out.write("\n")
    else:
        _render_poly(quotient, args.format, out)
    return 0


def _cmd_verify(args, out) -> int:
    if args.list:
        for claim_id, desc, _ in CLAIMS:
            out.write(f"{claim_id:18s} {desc}\n")
        out.write("variants: " + ", ".join(sorted(VARIANT_IDS)) + "\n")
        out.write("patterns: thm1.2-k<K>-h<H>-ell<L>, cor3.5-<A|B>-k<K>-ell<L>\n")
        return 0
    if not args.claim:
        raise UsageError("verify needs a claim id or `all` (see `verify --list`)")
    if args.claim == "all":
        reports = []
        for claim_id, _, fn in CLAIMS:
            args.ell = None
            reports.extend(fn(args))
    else:
        reports = resolve_claim(args.claim, args)
    _render_reports(reports, args.format, out)
    return 1 if any(r.status == "fail" for r in reports) else 0


def _cmd_search(args, out) -> int:
    if args.preset == "table1":
        if any(v is not None for v in (args.k_lo, args.k_hi, args.n_hi)):
            raise UsageError("the table1 preset fixes k 3..6 and bound 75; "
                             "drop the preset to use custom ranges")
        k_lo, k_hi, n_hi = 3, 6, 75
    else:
        k_lo = 3 if args.k_lo is None else args.k_lo
        k_hi = 6 if args.k_hi is None else args.k_hi
        n_hi = 75 if args.n_hi is None else args.n_hi
    try:
        results = search.exhaustive_search(k_lo, k_hi, n_hi, threads=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        json.dump([r.to_json_dict() for r in results], out, indent=2)
        out.write("\n")
    else:
        out.write(search.results_to_csv(results))
    return 0


def _cmd_colored(args, out) -> int:
    if args.what != "pk":
        raise UsageError(f"unknown colored computation {args.what!r}")
    if args.k < 1 or args.n < 0:
        raise UsageError("colored pk needs --k >= 1 and --n >= 0")
    value = partitions.colored_count(args.k, args.n)
    if args.format == "json":
        json.dump({"k": args.k, "n": args.n, "value": str(value)}, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        out.write("k,n,value\n")
        out.write(f"{args.k},{args.n},{value}\n")
    else:
        out.write(f"{value}\n")
    return 0


def _cmd_asymptotic(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    m_values = args.m if args.m else None
    samples = verify.rank_asymptotic_samples(args.n, m_values)
    if args.format == "json":
        json.dump([s.to_json_dict() for s in samples], out, indent=2)
        out.write("\n")
        return 0
    if args.format == "csv":
        out.write("n,m,gamma,predicted,actual,rel_error,out_of_range\n")
        for s in samples:
            out.write(f"{s.n},{s.m},{s.gamma:.9g},{s.predicted:.9g},{s.actual},"
                      f"{s.rel_error:.9g},{s.out_of_range}\n")
        return 0
    for s in samples:
        flag = " (outside validity window)" if s.out_of_range else ""
        out.write(f"n={s.n} m={s.m}: actual={s.actual} predicted={s.predicted:.2f} "
                  f"rel_error={s.rel_error:.4f}{flag}\n")
    return 0


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crankspace",
        description="Exact rank/crank partition statistics: polynomials, "
                    "cyclotomic quotients, claim verification, threshold search.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text",
                        help="output format (default text)")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker count for search-backed commands "
                             "(default: CRANKSPACE_THREADS or CPU count)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print a rank/crank polynomial")
    p.add_argument("kind", choices=("rank", "crank", "modified-rank", "modified-crank"))
    p.add_argument("--n", type=int, required=True, help="partition size / progression index")
    p.add_argument("--ell", type=int, default=None,
                   help="progression modulus (modified polynomials only)")

    p = sub.add_parser("quotient", help="divide a polynomial by a cyclotomic divisor")
    p.add_argument("--ell", type=int, required=True, help="odd prime index of the divisor")
    p.add_argument("--squared", action="store_true", help="divide by the squared-argument variant")
    p.add_argument("--negated", action="store_true", help="divide by the negated-argument variant")
    p.add_argument("--poly", required=True,
                   help="literal polynomial text, or rank:N / crank:N / mrank:ELL:N / mcrank:ELL:N")

    p = sub.add_parser("verify", help="run a claim verification suite")
    p.add_argument("claim", nargs="?", help="claim id, or `all`")
    p.add_argument("--n-max", type=int, default=None, dest="n_max",
                   help="largest progression index / size index to check (suite default otherwise)")
    p.add_argument("--n-lo", type=int, default=1, dest="n_lo",
                   help="smallest n for the monotonicity scan (default 1)")
    p.add_argument("--list", action="store_true", help="list claim ids and exit")

    p = sub.add_parser("search", help="threshold search over weight tuples")
    p.add_argument("preset", nargs="?", choices=("table1",),
                   help="table1 = the reference scan (k 3..6, bound 75)")
    p.add_argument("--k-lo", type=int, default=None, dest="k_lo")
    p.add_argument("--k-hi", type=int, default=None, dest="k_hi")
    p.add_argument("--n-hi", type=int, default=None, dest="n_hi",
                   help="scan bound: slices 1 <= n < n_hi (default 75)")

    p = sub.add_parser("colored", help="colored partition counts")
    p.add_argument("what", choices=("pk",))
    p.add_argument("--k", type=int, required=True, help="number of colors")
    p.add_argument("--n", type=int, required=True, help="partition size")

    p = sub.add_parser("asymptotic", help="rank-count large-size approximation diagnostic")
    p.add_argument("--n", type=int, required=True, help="partition size")
    p.add_argument("--m", type=int, action="append", default=None,
                   help="rank value to sample (repeatable; default: a small window)")

    return parser


HANDLERS = {
    "poly": _cmd_poly,
    "quotient": _cmd_quotient,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "colored": _cmd_colored,
    "asymptotic": _cmd_asymptotic,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.command](args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (partitions.BoundExceeded, partitions.InvalidEll, qseries.InvalidK,
            verify.InvalidCase, verify.HypothesisViolation, NotDivisible,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
