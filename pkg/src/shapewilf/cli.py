"""
Command-line front end.

Subcommands: count-av, check, suite, bijection, boards, fillings, oeis.
Global flags (before the subcommand): --format {table,csv,json-lines},
--offline, --cache-dir, --threads, --time-budget, --timings.

Exit status: 0 = success / verdict equal, 1 = mathematical divergence or
failed verification, 2 = usage error.  This contract is stable for
scripting.  json-lines output is byte-identical across runs for fixed
parameters (and offline OEIS mode); per-check wall times are only emitted
under --timings so as not to break that.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Optional, Sequence

from .perms import format_pattern_set, parse_pattern_set
from .pops import fan_pop, pop_to_pattern_set
from .boards import (
    board_counts_to_csv,
    count_fillings,
    enumerate_boards,
    fillings,
    format_board,
    format_filling,
    parse_board,
    parse_filling,
)
from .bijections import (
    BijectionError,
    BijectionOracle,
    fan_bijection,
    fan_bottom_last_oracle,
    fan_oracle,
    fan_to_bottom_last,
    direct_sum_transfer,
    transfer_oracle,
    verify_bijection,
    wedge_valley_bijection,
    wedge_valley_oracle,
)
from .equivalence import avoider_counts, shape_wilf_table, wilf_table
from .suites import SuiteOptions, run_suite
from . import oeis

EXIT_OK = 0
EXIT_DIVERGENCE = 1
EXIT_USAGE = 2


def _cell(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def _emit_records(records: list[dict], fmt: str, columns: list[str]) -> None:
    if fmt == "json-lines":
        for rec in records:
            print(json.dumps(rec, sort_keys=True, separators=(",", ":")))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(columns)
        for rec in records:
            writer.writerow([_cell(rec.get(col, "")) for col in columns])
    else:
        widths = {
            col: max(len(col), *(len(_cell(rec.get(col, ""))) for rec in records))
            for col in columns
        } if records else {col: len(col) for col in columns}
        print("  ".join(col.ljust(widths[col]) for col in columns))
        for rec in records:
            print("  ".join(_cell(rec.get(col, "")).ljust(widths[col]) for col in columns))


def _fan_params_for(patterns) -> tuple[int, int]:
    """Recognize a pattern set as a fan set, returning (k, apex)."""
    k = len(next(iter(patterns)))
    for apex in range(1, k + 1):
        if pop_to_pattern_set(fan_pop(k, apex)) == frozenset(patterns):
            return k, apex
    raise ValueError(
        f"{format_pattern_set(frozenset(patterns))} is not a fan pattern set"
    )


# ---------------------------------------------------------------------------
# subcommands

def cmd_count_av(args) -> int:
    patterns = parse_pattern_set(args.set)
    counts = avoider_counts(patterns, args.n)
    if args.time_budget is not None:
        start = time.perf_counter()
        n = args.n
        while n < 16 and time.perf_counter() - start < args.time_budget:
            n += 1
            counts = avoider_counts(patterns, n)
    records = [{"n": i + 1, "count": c} for i, c in enumerate(counts)]
    _emit_records(records, args.format, ["n", "count"])
    return EXIT_OK


def cmd_check(args) -> int:
    left = parse_pattern_set(args.left)
    right = parse_pattern_set(args.right)
    fail_fast = not args.full
    if args.kind == "wilf":
        n_max = args.n if args.n is not None else 9
        report = wilf_table(left, right, n_max, fail_fast=fail_fast)
        records = [
            {"n": r.n, "left_count": r.left_count, "right_count": r.right_count,
             "equal": r.equal}
            for r in report.rows
        ]
        _emit_records(records, args.format, ["n", "left_count", "right_count", "equal"])
    else:
        n_max = args.n if args.n is not None else 6
        report = shape_wilf_table(left, right, n_max, fail_fast=fail_fast)
        records = [
            {"n": r.n, "board": format_board(r.board), "left_count": r.left_count,
             "right_count": r.right_count, "equal": r.equal}
            for r in report.rows
        ]
        _emit_records(
            records, args.format,
            ["n", "board", "left_count", "right_count", "equal"],
        )
    print(report.describe(), file=sys.stderr)
    return EXIT_OK if report.equal else EXIT_DIVERGENCE


def cmd_suite(args) -> int:
    opts = SuiteOptions(
        n_wilf=args.n_wilf,
        n_shape=args.n_shape,
        n_bijection=args.n_bijection,
        n_oeis=args.n_oeis,
        offline=args.offline,
        cache_dir=args.cache_dir,
        time_budget=args.time_budget,
    )
    results = run_suite(args.name, opts)
    records = []
    for r in results:
        rec = {
            "suite": r.suite,
            "check": r.name,
            "kind": r.kind,
            "label": r.label,
            "claim": r.claim,
            "verdict": "pass" if r.passed else "FAIL",
            "params": r.params,
            "witness": r.details.get("witness", r.details if not r.passed else ""),
        }
        if args.timings:
            rec["wall_time_ms"] = round(r.wall_time * 1000.0, 1)
        records.append(rec)
    columns = ["suite", "check", "kind", "label", "verdict", "claim", "params", "witness"]
    if args.timings:
        columns.append("wall_time_ms")
    _emit_records(records, args.format, columns)
    failed = [r for r in results if not r.passed]
    print(
        f"{len(results) - len(failed)}/{len(results)} checks passed",
        file=sys.stderr,
    )
    return EXIT_OK if not failed else EXIT_DIVERGENCE


def _build_oracle(args) -> BijectionOracle:
    if args.name == "fan":
        if args.k is None or args.source_apex is None or args.target_apex is None:
            raise ValueError("fan needs --k, --source-apex and --target-apex")
        return fan_oracle(args.k, args.source_apex, args.target_apex)
    if args.name == "fan-bottom-last":
        if args.k is None:
            raise ValueError("fan-bottom-last needs --k")
        return fan_bottom_last_oracle(args.k)
    if args.name == "wedge-valley":
        if not args.source or not args.target:
            raise ValueError("wedge-valley needs --source and --target")
        return wedge_valley_oracle(
            parse_pattern_set(args.source), parse_pattern_set(args.target)
        )
    if args.name == "transfer":
        if not args.source or not args.target or not args.tail:
            raise ValueError("transfer needs --source, --target and --tail")
        k1, a1 = _fan_params_for(parse_pattern_set(args.source))
        k2, a2 = _fan_params_for(parse_pattern_set(args.target))
        if k1 != k2:
            raise ValueError("transfer source and target fan sets differ in size")
        return transfer_oracle(fan_oracle(k1, a1, a2), parse_pattern_set(args.tail))
    raise ValueError(f"unknown bijection {args.name!r}")


def cmd_bijection(args) -> int:
    oracle = _build_oracle(args)
    if args.verify is not None:
        report = verify_bijection(oracle, args.verify)
        print(report.describe())
        return EXIT_OK if report.ok else EXIT_DIVERGENCE
    if not args.filling:
        raise ValueError("need --filling FILLING or --verify N")
    f = parse_filling(args.filling)
    trace: Optional[list] = [] if args.trace else None
    try:
        if args.name == "fan":
            out = fan_bijection(f, args.k, args.source_apex, args.target_apex, trace)
        elif args.name == "fan-bottom-last":
            out = fan_to_bottom_last(f, args.k, trace)
        elif args.name == "wedge-valley":
            out = wedge_valley_bijection(
                f, parse_pattern_set(args.source), parse_pattern_set(args.target), trace
            )
        else:
            k1, a1 = _fan_params_for(parse_pattern_set(args.source))
            k2, a2 = _fan_params_for(parse_pattern_set(args.target))
            out = direct_sum_transfer(
                f, parse_pattern_set(args.tail), fan_oracle(k1, a1, a2), trace
            )
    except BijectionError as exc:
        print(f"bijection failed: {exc}", file=sys.stderr)
        return EXIT_DIVERGENCE
    if trace is not None:
        for line in trace:
            print(f"# {line}")
    print(format_filling(out))
    return EXIT_OK


def cmd_boards(args) -> int:
    boards = enumerate_boards(args.n)
    records = [{"board": format_board(b)} for b in boards]
    _emit_records(records, args.format, ["board"])
    print(f"{len(boards)} boards with {args.n} columns", file=sys.stderr)
    return EXIT_OK


def cmd_fillings(args) -> int:
    board = parse_board(args.board)
    avoid = parse_pattern_set(args.avoid) if args.avoid else frozenset()
    if args.count_only:
        count = count_fillings(board, avoid)
        if args.format == "csv":
            print(board_counts_to_csv({board: count}), end="")
        elif args.format == "json-lines":
            print(json.dumps({"board": format_board(board), "count": count},
                             sort_keys=True, separators=(",", ":")))
        else:
            print(count)
        return EXIT_OK
    records = [{"filling": format_filling(f)} for f in fillings(board, avoid)]
    _emit_records(records, args.format, ["filling"])
    return EXIT_OK


def cmd_oeis(args) -> int:
    if args.action == "fetch":
        seq = oeis.fetch_sequence(
            args.id, cache_dir=args.cache_dir, offline=args.offline
        )
        records = [{"index": i, "value": v} for i, v in seq.entries]
        _emit_records(records, args.format, ["index", "value"])
        print(f"{args.id}: {len(seq.entries)} entries ({seq.provenance})",
              file=sys.stderr)
        return EXIT_OK
    # compare
    patterns = parse_pattern_set(args.set)
    seq = oeis.fetch_sequence(args.id, cache_dir=args.cache_dir, offline=args.offline)
    counts = avoider_counts(patterns, args.n)
    if args.time_budget is not None:
        start = time.perf_counter()
        n = args.n
        while n < 16 and time.perf_counter() - start < args.time_budget:
            n += 1
            counts = avoider_counts(patterns, n)
    report = oeis.align_and_compare(counts, seq)
    rec = {
        "set": format_pattern_set(patterns),
        "id": args.id,
        "provenance": seq.provenance,
        "computed_terms": len(counts),
        "matched_prefix_length": report.matched_prefix_length,
        "alignment_offset": report.alignment_offset,
        "first_mismatch": list(report.first_mismatch) if report.first_mismatch else "",
    }
    _emit_records([rec], args.format, list(rec))
    full_match = report.aligned and report.first_mismatch is None and (
        report.matched_prefix_length >= min(len(counts), len(seq.entries))
    )
    return EXIT_OK if full_match else EXIT_DIVERGENCE


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shapewilf",
        description="Exhaustive (shape-)Wilf-equivalence checking for "
        "permutation patterns, POPs and Ferrers-board fillings.",
    )
    parser.add_argument("--format", choices=["table", "csv", "json-lines"],
                        default="table")
    parser.add_argument("--offline", action="store_true",
                        help="never touch the network; use cache/bundled data")
    parser.add_argument("--cache-dir", default=None, help="OEIS b-file cache directory")
    parser.add_argument("--threads", type=int, default=1,
                        help="accepted for interface stability; execution is "
                        "sequential and deterministic")
    parser.add_argument("--time-budget", type=float, default=None, metavar="SECONDS",
                        help="keep extending counting past --n while time remains")
    parser.add_argument("--timings", action="store_true",
                        help="include wall times in suite output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count-av", help="count avoiders of a pattern set")
    p.add_argument("--set", required=True, help='pattern set, e.g. "{12345,12354}"')
    p.add_argument("--n", type=int, default=9)
    p.set_defaults(fn=cmd_count_av)

    p = sub.add_parser("check", help="Wilf / shape-Wilf comparison of two sets")
    p.add_argument("kind", choices=["wilf", "shape-wilf"])
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--n", type=int, default=None,
                   help="defaults: 9 for wilf, 6 for shape-wilf")
    p.add_argument("--full", action="store_true",
                   help="do not stop at the first divergence")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("suite", help="run a named verification/evidence suite")
    p.add_argument("name", help="main-conjecture, corollary-13, "
                   "conjecture-fan-minus-one, conjecture-13452, "
                   "negative-controls, or all")
    p.add_argument("--n-wilf", type=int, default=None)
    p.add_argument("--n-shape", type=int, default=None)
    p.add_argument("--n-bijection", type=int, default=None)
    p.add_argument("--n-oeis", type=int, default=None)
    p.set_defaults(fn=cmd_suite)

    p = sub.add_parser("bijection", help="apply or verify a bijection")
    p.add_argument("name", choices=["fan", "fan-bottom-last", "wedge-valley",
                                    "transfer"])
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--source-apex", type=int, default=None)
    p.add_argument("--target-apex", type=int, default=None)
    p.add_argument("--source", default=None, help="source pattern set")
    p.add_argument("--target", default=None, help="target pattern set")
    p.add_argument("--tail", default=None,
                   help="pattern set appended by direct sum (transfer only)")
    p.add_argument("--filling", default=None, help='e.g. "[3,3,3]/321"')
    p.add_argument("--verify", type=int, default=None, metavar="N_MAX",
                   help="verify exhaustively on all boards up to N_MAX columns")
    p.add_argument("--trace", action="store_true",
                   help="print the recursion's slot choices")
    p.set_defaults(fn=cmd_bijection)

    p = sub.add_parser("boards", help="enumerate Ferrers boards admitting fillings")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_boards)

    p = sub.add_parser("fillings", help="enumerate/count fillings of a board")
    p.add_argument("--board", required=True, help='e.g. "[3,3,1]"')
    p.add_argument("--avoid", default=None, help="pattern set to avoid in-board")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=cmd_fillings)

    p = sub.add_parser("oeis", help="fetch or compare OEIS b-files")
    p.add_argument("action", choices=["fetch", "compare"])
    p.add_argument("id", nargs="?", default="A224295")
    p.add_argument("--set", default="{12345,12354}",
                   help="pattern set to count (compare only)")
    p.add_argument("--n", type=int, default=9)
    p.set_defaults(fn=cmd_oeis)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except (ValueError, oeis.OeisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:  # console-script entry point
    sys.exit(main())


if __name__ == "__main__":
    entry()
