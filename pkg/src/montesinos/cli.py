"""Command-line front end.

Subcommands:
  enumerate <tangles>      candidate-surface reports for one knot
  verify-family --from N [--to M]
                           check the M(-1/2, 2/5, 1/n) slope-pair family
  pair-gap <tangles>       minimal difference between distinct slopes
  seifert <tangles>        the slope-zero reference system

Knots are written as comma-separated fractions, e.g. "-1/2,2/5,1/11".
Output is byte-deterministic for a fixed invocation. Exit codes: 0 ok,
1 verification failure, 2 usage or parse error, 3 combination cap hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bruteforce import brute_force_endpoints, normalize_weight_vector
from .rationals import Frac, decimal_str
from .systems import (
    DEFAULT_COMBINATION_CAP,
    CapExceededError,
    DegenerateSystemError,
    MontesinosKnot,
    SeifertReferenceError,
    enumerate_systems_with_diagnostics,
    find_seifert_system,
    solve_endpoints,
)
from .surfaces import CSV_COLUMNS, build_reports, system_twist

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

DEFAULT_TYPES = ("I", "III")


def _knot_reports(spec: str, include_types, cap: int, dedupe: bool):
    knot = MontesinosKnot.parse(spec)
    systems, diagnostics = enumerate_systems_with_diagnostics(knot, cap)
    reference = find_seifert_system(knot)
    reports = build_reports(systems, reference)
    reports = [r for r in reports if r.system.system_type in include_types]
    if dedupe:
        seen = set()
        kept = []
        for r in reports:
            if r.slope not in seen:
                seen.add(r.slope)
                kept.append(r)
        reports = kept
    for d in diagnostics:
        print(f"note: {d.kind}: {d.detail}", file=sys.stderr)
    return knot, reference, reports


def _emit_reports(reports, fmt: str):
    if fmt == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2))
        return
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in reports:
            writer.writerow(r.to_csv_row())
        print(buffer.getvalue(), end="")
        return
    header = f"{'slope':>12} {'type':<4} {'twist':>8} {'sheets':>6} {'euler':>5} {'bdry':>4} {'essential':<12} seifert"
    print(header)
    for r in reports:
        euler = "-" if r.euler is None else str(r.euler)
        seifert = "yes" if r.seifert_flag else ""
        print(
            f"{str(r.slope):>12} {r.system.system_type:<4} {str(r.twist):>8} "
            f"{r.sheets:>6} {euler:>5} {r.boundary_components:>4} {r.essential:<12} {seifert}"
        )
    for r in reports:
        for note in r.notes:
            print(f"note: slope {r.slope}: {note}")


def _cross_check(knot: MontesinosKnot, m_max: int = 64) -> int:
    """Diff the exact solver against the integer-weight scan; the number
    of mismatching combinations is returned."""
    from itertools import product

    from .edgepaths import enumerate_skeletons

    per_tangle = [
        [
            sk
            for sk in enumerate_skeletons(f)
            if sk.constant or (sk.n_edges >= 1 and not sk.final_left.is_infinite)
        ]
        for f in knot.tangles
    ]
    checked = mismatched = 0
    for combo in product(*per_tangle):
        if all(ch.constant for ch in combo):
            continue
        try:
            solution = solve_endpoints(combo)
        except DegenerateSystemError:
            continue
        vectors = brute_force_endpoints(combo, m_max)
        normalized = {normalize_weight_vector(v, combo) for v in vectors}
        checked += 1
        if solution is None:
            if normalized:
                mismatched += 1
        else:
            expected = (solution.weights, solution.c)
            hit = max(t.den for t in solution.weights) <= m_max
            if normalized - {expected} or (hit and expected not in normalized):
                mismatched += 1
    print(f"cross-check: {checked} combinations, {mismatched} mismatches", file=sys.stderr)
    return mismatched


def cmd_enumerate(args) -> int:
    include = ("I", "II", "III") if args.all_types else DEFAULT_TYPES
    knot, _, reports = _knot_reports(args.knot, include, args.cap, args.dedupe)
    if args.cross_check and _cross_check(knot):
        return EXIT_VERIFY_FAILED
    _emit_reports(reports, args.format)
    return EXIT_OK


def family_knot(n: int) -> MontesinosKnot:
    return MontesinosKnot.parse(f"-1/2,2/5,1/{n}")


def expected_family_slopes(n: int) -> tuple[Frac, Frac]:
    return Frac(2 * (n - 1) ** 2, n), Frac(2 * (n * n - 9 * n + 15), n - 7)


def expected_family_gap(n: int) -> Frac:
    return Frac(2) * (Frac(1, n - 7) - Frac(1, n))


def verify_family_row(n: int, cap: int = DEFAULT_COMBINATION_CAP) -> dict:
    """One family check; the row carries pass/fail and the failed fields."""
    knot = family_knot(n)
    systems, _ = enumerate_systems_with_diagnostics(knot, cap)
    reference = find_seifert_system(knot)
    reports = build_reports(systems, reference)
    slope_small, slope_big = expected_family_slopes(n)
    failures = []

    def pick(slope):
        return [r for r in reports if r.slope == slope]

    small = pick(slope_small)
    big = pick(slope_big)
    if not any(r.essential == "proven" and r.essential_reason == "common-sign" for r in small):
        failures.append("slope_small")
    if not any(r.essential == "proven" and r.essential_reason == "constant-path" for r in big):
        failures.append("slope_big")
    ref_twist = system_twist(reference)
    if ref_twist != 4 - 2 * n:
        failures.append("reference_twist")
    ref_reports = [r for r in reports if r.seifert_flag]
    if not ref_reports or any(r.slope != 0 for r in ref_reports):
        failures.append("reference_slope")
    if not any(r.sheets == n and r.euler == -n and r.boundary_components == 1 for r in small):
        failures.append("surface_small_invariants")
    if not any(
        r.sheets == n - 7 and r.euler == -(n - 7) and r.boundary_components == 2 and r.notes
        for r in big
    ):
        failures.append("surface_big_invariants")
    gap = slope_big - slope_small
    if gap != expected_family_gap(n):
        failures.append("gap")
    return {
        "n": n,
        "slope_small": str(slope_small),
        "slope_big": str(slope_big),
        "gap": str(gap),
        "gap_decimal": decimal_str(gap),
        "reference_twist": str(ref_twist),
        "pass": not failures,
        "failures": failures,
    }


def cmd_verify_family(args) -> int:
    from_n, to_n = args.from_n, args.to_n if args.to_n is not None else args.from_n
    if from_n < 11 or to_n < from_n or from_n % 2 == 0 or to_n % 2 == 0:
        print("verify-family needs odd bounds with 11 <= from <= to", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    all_ok = True
    for n in range(from_n, to_n + 1, 2):
        row = verify_family_row(n, args.cap)
        rows.append(row)
        all_ok = all_ok and row["pass"]
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "pass", "slope_small", "slope_big", "gap", "reference_twist", "failures"])
        for row in rows:
            writer.writerow(
                [
                    row["n"],
                    "true" if row["pass"] else "false",
                    row["slope_small"],
                    row["slope_big"],
                    row["gap"],
                    row["reference_twist"],
                    ";".join(row["failures"]),
                ]
            )
        print(buffer.getvalue(), end="")
    else:
        for row in rows:
            status = "PASS" if row["pass"] else "FAIL " + ",".join(row["failures"])
            print(
                f"n={row['n']} {status} slopes={row['slope_small']},{row['slope_big']} "
                f"gap={row['gap']} seifert_twist={row['reference_twist']}"
            )
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


def cmd_pair_gap(args) -> int:
    include = ("I", "II", "III") if args.all_types else DEFAULT_TYPES
    _, _, reports = _knot_reports(args.knot, include, args.cap, dedupe=False)
    slopes = sorted({r.slope for r in reports})
    if len(slopes) < 2:
        if args.format == "json":
            print(json.dumps({"knot": args.knot, "pair": None}))
        else:
            print("no pair: fewer than two distinct slopes")
        return EXIT_OK
    best = None
    for a, b in zip(slopes, slopes[1:]):
        gap = b - a
        if best is None or gap < best[0]:
            best = (gap, a, b)
    gap, low, high = best
    if args.format == "json":
        print(
            json.dumps(
                {
                    "knot": args.knot,
                    "min_gap": str(gap),
                    "min_gap_decimal": decimal_str(gap),
                    "pair": [str(low), str(high)],
                    "distinct_slopes": len(slopes),
                }
            )
        )
    else:
        print(
            f"minimal gap {gap} (~{decimal_str(gap)}) between slopes {low} and {high} "
            f"({len(slopes)} distinct slopes)"
        )
    return EXIT_OK


def cmd_seifert(args) -> int:
    knot = MontesinosKnot.parse(args.knot)
    reference = find_seifert_system(knot)
    twist = system_twist(reference)
    if args.format == "json":
        payload = reference.to_dict()
        payload["twist"] = str(twist)
        print(json.dumps(payload, indent=2))
    else:
        print(f"Seifert reference for {knot} (twist {twist}):")
        for path in reference.render_paths():
            print(f"  {path}")
    return EXIT_OK


def _add_common(parser, with_knot=True):
    if with_knot:
        parser.add_argument("knot", help="comma-separated tangle fractions, e.g. -1/2,2/5,1/11")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", dest="format", action="store_const", const="json")
    group.add_argument("--csv", dest="format", action="store_const", const="csv")
    parser.add_argument("--cap", type=int, default=DEFAULT_COMBINATION_CAP)
    parser.set_defaults(format="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="montesinos-slopes",
        description="Enumerate candidate essential surfaces and boundary slopes of Montesinos knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="reports for every candidate system of a knot")
    _add_common(p)
    p.add_argument("--all-types", action="store_true", help="include type II systems")
    p.add_argument("--dedupe", action="store_true", help="one report per distinct slope")
    p.add_argument("--cross-check", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-family", help="check the M(-1/2,2/5,1/n) slope-pair family")
    p.add_argument("--from", dest="from_n", type=int, required=True)
    p.add_argument("--to", dest="to_n", type=int, default=None)
    _add_common(p, with_knot=False)
    p.set_defaults(func=cmd_verify_family)

    p = sub.add_parser("pair-gap", help="minimal difference between distinct slopes")
    _add_common(p)
    p.add_argument("--all-types", action="store_true", help="include type II systems")
    p.set_defaults(func=cmd_pair_gap)

    p = sub.add_parser("seifert", help="show the slope-zero reference system")
    _add_common(p)
    p.set_defaults(func=cmd_seifert)

    return parser


def _shield_negative_knots(argv):
    # argparse reads "-1/2,2/5,1/11" as an option; a leading space makes it
    # positional again, and the fraction parser strips whitespace anyway.
    import re

    return [" " + a if re.match(r"^-\d+[/,]", a) else a for a in argv]


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(_shield_negative_knots(argv))
    if hasattr(args, "knot"):
        args.knot = args.knot.strip()
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except SeifertReferenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
