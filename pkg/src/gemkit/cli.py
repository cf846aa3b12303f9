"""Command line front end.

Subcommands: validate | invariants | canon | cover | census | table1.

Code files are UTF-8 text, one code per line with an optional name prefix
separated by a tab; ``#`` starts a comment line and blank lines are
skipped.  ``-`` reads the standard input.  Data goes to stdout (JSON lines
for invariants/cover/census records), diagnostics to stderr.  Exit status:
0 success, 1 validation or verification failure, 2 usage or input errors.
The ``GEMKIT_THREADS`` environment variable caps the worker count used for
per-record processing (default 1, sequential).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

import gemkit.census as census_mod
from gemkit.coverings import (
    derived_graph,
    find_admissible_cyclic_coverings,
    is_admissible,
)
from gemkit.errors import GemError
from gemkit.graphs import canonical_code, parse_code
from gemkit.topology import edge_framework, invariant_report

USAGE_ERROR = 2
CHECK_FAILED = 1


def _worker_count() -> int:
    raw = os.environ.get("GEMKIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_records(fn, items):
    """Apply ``fn`` preserving order, with an optional process pool."""
    workers = _worker_count()
    if workers == 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def read_records(path: str) -> list[tuple[Optional[str], str]]:
    """Parse a code file into (name, code) records."""
    if path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    records = []
    for line in lines:
        line = line.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        if "\t" in line:
            name, code = line.split("\t", 1)
            records.append((name, code))
        else:
            records.append((None, line))
    return records


def _json_line(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# ---------------------------------------------------------------------------
# per-record workers (module level so a process pool can pickle them)
# ---------------------------------------------------------------------------


def _validate_record(record):
    name, code = record
    try:
        parse_code(code)
    except GemError as exc:
        return ("ERROR", name or "-", code, "%s: %s" % (type(exc).__name__, exc))
    return ("OK", name or "-", code, None)


def _invariants_record(record):
    name, code = record
    try:
        g = parse_code(code)
        return ("ok", _json_line(invariant_report(g, name=name, code=code)))
    except GemError as exc:
        return ("err", "%s: %s: %s" % (name or code, type(exc).__name__, exc))


def _canon_record(record):
    name, code = record
    try:
        canon = canonical_code(parse_code(code))
        return ("ok", "%s\t%s" % (name, canon) if name else canon)
    except GemError as exc:
        return ("err", "%s: %s: %s" % (name or code, type(exc).__name__, exc))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_validate(args) -> int:
    records = read_records(args.file)
    failures = 0
    for status, name, code, detail in _map_records(_validate_record, records):
        if status == "OK":
            print("OK\t%s\t%s" % (name, code))
        else:
            failures += 1
            print("ERROR\t%s\t%s\t%s" % (name, code, detail))
    return CHECK_FAILED if failures else 0


def _cmd_invariants(args) -> int:
    records = read_records(args.file)
    failures = 0
    for status, payload in _map_records(_invariants_record, records):
        if status == "ok":
            print(payload)
        else:
            failures += 1
            print(payload, file=sys.stderr)
    return CHECK_FAILED if failures else 0


def _cmd_canon(args) -> int:
    records = read_records(args.file)
    failures = 0
    for status, payload in _map_records(_canon_record, records):
        if status == "ok":
            print(payload)
        else:
            failures += 1
            print(payload, file=sys.stderr)
    return CHECK_FAILED if failures else 0


def _cmd_cover(args) -> int:
    try:
        base = parse_code(args.code)
    except GemError as exc:
        print("bad base code: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    solutions = find_admissible_cyclic_coverings(base, args.degree, limit=args.limit)
    _, tail, _, free = edge_framework(base)
    records = []
    for va in solutions:
        total, cm = derived_graph(va)
        voltages = []
        for edge in free:
            c, _, _ = edge
            t = tail[edge]
            voltages.append([t, c, va.volt[t][c]])
        report = invariant_report(total)
        records.append(
            {
                "voltages": voltages,
                "derived_code": canonical_code(total),
                "admissible": is_admissible(cm),
                "boundary": report["boundary"],
                "h1": report["h1"],
            }
        )
    print(
        _json_line(
            {"base_code": args.code, "n": args.degree, "solutions": records}
        )
    )
    return 0


def _cmd_census(args) -> int:
    if args.order > census_mod.ENUMERATION_CAP:
        print(
            "order %d exceeds the enumeration cap %d"
            % (args.order, census_mod.ENUMERATION_CAP),
            file=sys.stderr,
        )
        return USAGE_ERROR
    if args.order >= 12 and not args.allow_large:
        print(
            "order %d is slow; pass --allow-large to run it" % args.order,
            file=sys.stderr,
        )
        return USAGE_ERROR
    entries = census_mod.build_census(args.order)
    if args.max_results is not None:
        entries = entries[: args.max_results]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            census_mod.write_census(fh, entries, args.order)
    else:
        census_mod.write_census(sys.stdout, entries, args.order)
    return 0


def _cmd_table1(args) -> int:
    report = census_mod.verify_table1()
    for row in report.rows:
        if row.ok:
            print("PASS\t%s" % row.name)
        else:
            print("FAIL\t%s\t%s" % (row.name, "; ".join(row.problems)))
    print(
        "canonical codes distinct: %s"
        % ("yes" if report.distinct_canonical else "NO")
    )
    return 0 if report.ok else CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gemkit",
        description="Edge-colored graph codes of 3-manifolds: validation, "
        "invariants, canonical forms, cyclic coverings and censuses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check every code in a file parses")
    p.add_argument("file", help="code file, or - for stdin")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("invariants", help="print one invariant JSON record per code")
    p.add_argument("file", help="code file, or - for stdin")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("canon", help="print the canonical code of every input code")
    p.add_argument("file", help="code file, or - for stdin")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("cover", help="solve for admissible cyclic coverings")
    p.add_argument("--code", required=True, help="base graph code")
    p.add_argument("--degree", required=True, type=int, help="covering degree n")
    p.add_argument(
        "--limit",
        type=int,
        default=1,
        help="maximum number of solutions to report (default 1)",
    )
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("census", help="enumerate one order up to isomorphism")
    p.add_argument("--order", required=True, type=int, help="graph order (even)")
    p.add_argument("--max-results", type=int, default=None)
    p.add_argument("--out", default=None, help="write to a file instead of stdout")
    p.add_argument(
        "--allow-large",
        action="store_true",
        help="permit orders at the top of the enumeration cap",
    )
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("table1", help="verify the bundled order-14 table")
    p.set_defaults(func=_cmd_table1)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        raise
    except GemError as exc:
        print("%s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return CHECK_FAILED
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR


def main_entry() -> None:
    """Console-script entry point."""
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # The downstream consumer closed the pipe; silence the final
        # interpreter flush and exit the way shells expect (128+SIGPIPE).
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 141
    raise SystemExit(code)


if __name__ == "__main__":
    main_entry()
