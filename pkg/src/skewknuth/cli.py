"""Command-line interface.

    skewknuth count --mu 3,2,1 --m 3 --method closed
    skewknuth kostka --mu 3,2,1 --weight 3,1^3
    skewknuth character --mu 3,2,1 --cycle-type 3,1^3 --method lassalle
    skewknuth table --n 6 --m 2,3,4 --format csv
    skewknuth verify closed-forms --max-n 9

Numbers are always printed as decimal strings. Exit codes: 0 success,
1 verification failure, 2 usage, parse or domain error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from skewknuth.characters import SMALL_SUPPORTS, chi_mn, chi_small, frobenius_skew, support_of
from skewknuth.closed_forms import DomainError, kostka_hook, skew_count_m2, skew_count_m3, skew_count_m4
from skewknuth.partitions import (
    Partition,
    PartitionError,
    contains,
    format_partition,
    generate_partitions,
    parse_composition,
    parse_partition,
    skew,
)
from skewknuth.tableaux_oracles import (
    DEFAULT_ENUM_CAP,
    aitken_count,
    enumerate_skew_syt,
    hook_count,
    kostka_enumerate,
)
from skewknuth.verify import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
COUNT_METHODS = ("closed", "determinant", "enumerate", "frobenius")


class UsageError(Exception):
    pass


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def closed_count(mu: Partition, m: int) -> int:
    if m == 1:
        return hook_count(mu)
    if m == 2:
        return skew_count_m2(mu)
    if m == 3:
        return skew_count_m3(mu)
    if m == 4:
        return skew_count_m4(mu)
    raise DomainError(f"no closed form for m = {m}; closed forms cover m = 1..4")


def skew_count(mu: Partition, m: int, method: str, enum_cap: int | None = DEFAULT_ENUM_CAP) -> int:
    """f^{mu/(m)} by the requested method; all methods refuse a first row shorter than m."""
    if not 1 <= m <= mu.n:
        raise DomainError(f"m must satisfy 1 <= m <= n = {mu.n}, got {m}")
    if mu.first < m:
        raise DomainError(f"first row of {mu} is shorter than m = {m}")
    if method == "closed":
        return closed_count(mu, m)
    if method == "determinant":
        return aitken_count(skew(mu, (m,)))
    if method == "enumerate":
        return enumerate_skew_syt(skew(mu, (m,)), cap=enum_cap)
    if method == "frobenius":
        return frobenius_skew(mu, (m,))
    raise UsageError(f"unknown method {method!r}")


def cmd_count(args) -> int:
    mu = parse_partition(args.mu)
    value = skew_count(mu, args.m, args.method, args.enum_cap)
    _emit({"mu": str(mu), "m": args.m, "method": args.method, "value": str(value)})
    return EXIT_OK


def _hook_weight(weight: tuple[int, ...]) -> int | None:
    """Return m if ``weight`` is ``(m, 1^k)``."""
    if weight and all(w == 1 for w in weight[1:]):
        return weight[0]
    return None


def cmd_kostka(args) -> int:
    mu = parse_partition(args.mu)
    weight = parse_composition(args.weight)
    if sum(weight) != mu.n:
        raise DomainError(f"weight {format_partition(weight)} has size {sum(weight)}, shape has size {mu.n}")
    m = _hook_weight(weight)
    if m is not None:
        value, method = kostka_hook(mu, m), "hook"
    else:
        value, method = kostka_enumerate(mu, weight, cap=args.enum_cap), "enumerate"
    _emit({"mu": str(mu), "weight": format_partition(weight), "method": method, "value": str(value)})
    return EXIT_OK


def cmd_character(args) -> int:
    mu = parse_partition(args.mu)
    cls = parse_partition(args.cycle_type)
    if cls.n != mu.n:
        raise DomainError(f"cycle type {cls} has size {cls.n}, shape has size {mu.n}")
    if args.method == "lassalle":
        tag = support_of(cls)
        if tag not in SMALL_SUPPORTS:
            raise DomainError(
                f"lassalle method supports cycle types {[t + (1,) for t in SMALL_SUPPORTS]} padded with fixed points, got {cls}"
            )
        value = chi_small(mu, tag)
    else:
        value = chi_mn(mu, cls)
    _emit({"mu": str(mu), "cycle_type": str(cls), "method": args.method, "value": str(value)})
    return EXIT_OK


def table_rows(n: int, ms: Sequence[int]) -> list[list[str]]:
    rows = []
    for mu in generate_partitions(n):
        row = [str(mu), str(hook_count(mu))]
        for m in ms:
            row.append(str(kostka_hook(mu, m)) if m <= n and mu.first >= m else "0")
        rows.append(row)
    return rows


def cmd_table(args) -> int:
    if args.n < 1:
        raise UsageError("n must be at least 1")
    ms = sorted(set(parse_composition(args.m)))
    header = ["mu", "f"] + [f"f_skew_{m}" for m in ms]
    rows = table_rows(args.n, ms)
    if args.format == "json":
        for row in rows:
            print(json.dumps(dict(zip(header, row))))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_n)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewknuth", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="f^{mu/(m)} by one method")
    p.add_argument("--mu", required=True, help="partition, e.g. 3,2,1")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=COUNT_METHODS, default="closed")
    p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("kostka", help="Kostka number K(mu, weight)")
    p.add_argument("--mu", required=True)
    p.add_argument("--weight", required=True, help='weight, e.g. "3,1^3"')
    p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("character", help="character value chi^mu(cycle type)")
    p.add_argument("--mu", required=True)
    p.add_argument("--cycle-type", required=True, help='e.g. "3,1^3"')
    p.add_argument("--method", choices=("lassalle", "mn"), default="mn")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("table", help="f^mu and f^{mu/(m)} for every mu |- n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", default="2", help="comma-separated list of m values")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-n", type=int, default=None, help="largest n (suite default if omitted)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (PartitionError, DomainError, UsageError, ValueError) as exc:
        print(f"skewknuth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
