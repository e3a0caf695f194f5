"""``knotmarket`` command line."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .braid import BraidError, BraidWord
from .classify import TableFormatError
from .market import PriceTableError, parse_date, read_price_table
from .report import PipelineError, braid_report, run_pipeline, windowed_report

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_REFUSED = 3


def _tickers(text: str | None) -> list[str] | None:
    if not text:
        return None
    return [t.strip() for t in text.split(",") if t.strip()]


def _analyze(args: argparse.Namespace) -> int:
    table = read_price_table(args.input, _tickers(args.tickers))
    start = parse_date(args.date_from) if args.date_from else None
    end = parse_date(args.date_to) if args.date_to else None
    report = run_pipeline(table, start, end)
    sys.stdout.write(report.render_json() if args.format == "json" else report.render_text())
    return EXIT_REFUSED if report.refused else EXIT_OK


def _windows(args: argparse.Namespace) -> int:
    table = read_price_table(args.input, _tickers(args.tickers))
    result = windowed_report(table, args.length, args.stride)
    sys.stdout.write(result.render_json() if args.format == "json" else result.summary_csv())
    for note in result.warnings:
        print(f"warning: {note}", file=sys.stderr)
    return EXIT_REFUSED if any(r.refused for r in result.reports) else EXIT_OK


def _invariant(args: argparse.Namespace) -> int:
    word = BraidWord.parse(args.word, args.strands)
    out = braid_report(word)
    if args.format == "json":
        sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    else:
        for key in ("braid_word", "reduced_word", "writhe", "component_count",
                    "jones", "conway", "alexander"):
            value = out[key]
            print(f"{key:<16}{'-' if value is None else value}")
        print(f"{'classification':<16}{', '.join(out['classification']) or 'unrecognised'}")
        for w in out["warnings"]:
            print(f"warning: {w}")
    return EXIT_REFUSED if out["jones"] is None else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotmarket",
        description="Braid, knot and polynomial invariants of stock-price crossings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyse one date window of a price CSV")
    p.add_argument("--input", required=True, help="CSV with header date,SYM1,SYM2,...")
    p.add_argument("--tickers", help="comma-separated subset of columns")
    p.add_argument("--from", dest="date_from", help="first date (YYYY-MM-DD)")
    p.add_argument("--to", dest="date_to", help="last date (YYYY-MM-DD)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_analyze)

    p = sub.add_parser("windows", help="rolling-window summary series")
    p.add_argument("--input", required=True)
    p.add_argument("--tickers")
    p.add_argument("--length", type=int, required=True, help="window length in trading rows")
    p.add_argument("--stride", type=int, required=True, help="step between window starts, in rows")
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.set_defaults(func=_windows)

    p = sub.add_parser("invariant", help="invariants of a braid word, e.g. \"s1 s1\"")
    p.add_argument("--word", required=True)
    p.add_argument("--strands", type=int)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_invariant)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (OSError, PriceTableError, BraidError, PipelineError, TableFormatError, ValueError) as exc:
        print(f"knotmarket: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
