"""Command-line surface: class tables, counts, representatives, verification."""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from typing import Sequence

from .centralizer import abelianization_invariants, gamma
from .combinat import multiset_coefficient
from .counting import (
    Ramification,
    count_report,
    count_rsc,
    enumerate_types,
    parse_ramification,
)
from .oracle import ORACLE_MAX_N, OracleBudgetError, oracle_count
from .perm import (
    canonical_representative,
    centralizer_order,
    class_size,
    cycle_string,
    enumerate_cycle_types,
)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _print_table(headers: list[str], rows: list[list[str]]) -> None:
    widths = [
        max(len(header), *(len(row[i]) for row in rows)) if rows else len(header)
        for i, header in enumerate(headers)
    ]
    print("  ".join(header.ljust(w) for header, w in zip(headers, widths)).rstrip())
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def cmd_classes(args: argparse.Namespace) -> int:
    rows = []
    for lam in enumerate_cycle_types(args.n):
        rows.append(
            [
                str(lam),
                str(class_size(lam)),
                str(centralizer_order(lam)),
                str(gamma(lam)),
                str(abelianization_invariants(lam)),
            ]
        )
    _print_table(["type", "size", "centralizer", "gamma", "factors"], rows)
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    ram = parse_ramification(args.ramification, args.n)
    if args.format == "json":
        print(json.dumps(count_report(ram), indent=2))
        return 0
    rows = [
        [str(lam), str(mult), str(gamma(lam)), str(multiset_coefficient(gamma(lam), mult))]
        for lam, mult in ram.entries
    ]
    _print_table(["class", "r", "gamma", "factor"], rows)
    print(f"count = {count_rsc(ram)}")
    return 0


def cmd_reps(args: argparse.Namespace) -> int:
    ram = parse_ramification(args.ramification, args.n)
    print(f"# n = {ram.n}, ramification: {ram}")
    print(
        "# classes: "
        + "; ".join(
            f"{lam} (gamma={gamma(lam)}, u0={cycle_string(canonical_representative(lam))})"
            for lam, _ in ram.entries
        )
    )
    print(f"# count = {count_rsc(ram)}")
    emitted = 0
    for type_vector in enumerate_types(ram):
        if args.limit is not None and emitted >= args.limit:
            break
        print(type_vector)
        emitted += 1
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if not 2 <= args.n <= ORACLE_MAX_N:
        print(
            f"error: verify needs 2 <= n <= {ORACLE_MAX_N}, got n = {args.n}",
            file=sys.stderr,
        )
        return 2
    classes = enumerate_cycle_types(args.n)
    cases = failures = 0
    for multiplicities in itertools.product(range(args.max_r + 1), repeat=len(classes)):
        ram = Ramification(args.n, tuple(zip(classes, multiplicities)))
        expected = count_rsc(ram)
        observed = oracle_count(ram)
        cases += 1
        if expected == observed:
            print(f"PASS  {ram}  formula={expected} oracle={observed}")
        else:
            failures += 1
            print(f"FAIL  {ram}  formula={expected} oracle={observed}")
    print(
        f"S_{args.n}, r_C <= {args.max_r}: {cases} cases, "
        f"{cases - failures} passed, {failures} failed"
    )
    return 1 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramsys",
        description=(
            "Exact counting and enumeration of isomorphism classes of "
            "ramification systems with characters over S_n (n != 6)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classes = sub.add_parser(
        "classes", help="table of cycle types with sizes, centralizer orders and gamma"
    )
    p_classes.add_argument("n", type=_positive_int)
    p_classes.set_defaults(handler=cmd_classes)

    p_count = sub.add_parser("count", help="count isomorphism classes for a ramification")
    p_count.add_argument("n", type=_positive_int)
    p_count.add_argument("--ramification", required=True, metavar="SPEC")
    p_count.add_argument("--format", choices=("table", "json"), default="table")
    p_count.set_defaults(handler=cmd_count)

    p_reps = sub.add_parser("reps", help="stream one representative type vector per class")
    p_reps.add_argument("n", type=_positive_int)
    p_reps.add_argument("--ramification", required=True, metavar="SPEC")
    p_reps.add_argument("--limit", type=int, default=None)
    p_reps.set_defaults(handler=cmd_reps)

    p_verify = sub.add_parser(
        "verify", help="brute-force orbit counts against the closed form"
    )
    p_verify.add_argument("n", type=_positive_int)
    p_verify.add_argument("--max-r", type=_positive_int, default=1, dest="max_r")
    p_verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OracleBudgetError) as exc:
        # covers ramification parse errors, the n = 6 rejection, and
        # exceeded oracle budgets
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
