"""Command line front end.

    pisdim analyze "Z(4) x Z(9)" --oracle --json out.json --dot out.dot
    pisdim verify --family fields --range n=3..5

Exit codes: 0 success, 1 usage or input error, 2 disagreement between
computed methods (analyze) or an unconfirmed prediction (verify).
"""

from __future__ import annotations

import argparse
import sys

from .pis import EmptyGraphError, write_dot
from .report import (
    FAMILIES,
    DisconnectedCaseError,
    analyze_graph,
    export_json,
    format_report,
    format_sweep,
    parse_range,
    verify_family,
)
from .rings import RingSpecError
from .sdim import DEFAULT_BRUTEFORCE_CAP

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pisdim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="analyze the prime ideal sum graph of one ring")
    a.add_argument("ring", help='ring description, e.g. "Z(8) x Z(27)" or "F x F x F"')
    a.add_argument("--json", metavar="PATH", help="write the report as JSON")
    a.add_argument("--dot", metavar="PATH", help="write the graph in DOT format")
    a.add_argument("--oracle", action="store_true", help="also run the brute-force search")
    a.add_argument("--oracle-cap", type=int, default=DEFAULT_BRUTEFORCE_CAP, metavar="N")
    a.add_argument(
        "--timings", action="store_true", help="record per-stage wall time (JSON is then not reproducible)"
    )

    v = sub.add_parser("verify", help="compare computed values with the closed forms over a family")
    v.add_argument("--family", required=True, choices=FAMILIES)
    v.add_argument("--range", required=True, dest="range_", metavar="SPEC", help="e.g. n=3..5 or n=1,m=1..3")
    return parser


def cmd_analyze(args) -> int:
    try:
        report, g = analyze_graph(
            args.ring, oracle=args.oracle, oracle_cap=args.oracle_cap, timings=args.timings
        )
    except (RingSpecError, DisconnectedCaseError, EmptyGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(format_report(report))
    if args.json:
        export_json(report, args.json)
    if args.dot:
        write_dot(g, args.dot, name=report.spec)
    if not report.methods_agree:
        print(f"MISMATCH between methods: {report.sdim_values()}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        rows = verify_family(args.family, parse_range(args.range_))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(format_sweep(rows))
    for row in rows:
        if row.skipped:
            print(f"notice: skipped {list(row.spec.factors)}: {row.skipped}", file=sys.stderr)
    return EXIT_OK if all(row.ok for row in rows) else EXIT_MISMATCH


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code
    if args.command == "analyze":
        return cmd_analyze(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
