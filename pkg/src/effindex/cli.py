"""Command-line front end.

Subcommands:
    analyze      batch-analyze price CSVs and write a ranked report
    table-check  regression-check the bundled 38-index reference table
    validate     Monte Carlo validation of the estimators vs synthetic oracles
    radar        render radar SVGs from a results file

Exit codes: 0 success, 1 usage error, 2 data error, 3 check failure.
"""

import argparse
import json
import sys
from pathlib import Path

from . import __version__, fixtures, radar, synth, validation
from .efficiency import EfficiencyConfig, analyze_series, rank_records, scaled_deviations
from .exceptions import EffindexError
from .ingest import parse_price_csv, to_log_prices, to_log_returns

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_CHECK = 3

RESULTS_HEADER = "ticker,country,hurst,fractal,entropy,ei,rank"


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the CLI contract reserves 2 for
    # data errors, so remap.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser():
    parser = _Parser(prog="effindex", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"effindex {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze price CSVs and rank them")
    p_an.add_argument("inputs", nargs="*", help="price CSV files or directories")
    p_an.add_argument("--manifest", help="CSV manifest: ticker,path,country")
    p_an.add_argument("--out", default=".", help="output directory (default: .)")
    p_an.add_argument("--q", type=float, default=0.5, help="bandwidth exponent in (0,1)")
    p_an.add_argument("--apen-m", type=int, default=2, help="entropy embedding dimension")
    p_an.add_argument("--apen-r", type=float, default=0.2, help="entropy tolerance multiplier of sd")
    p_an.add_argument("--surrogates", type=int, default=10, help="entropy surrogate count")
    p_an.add_argument("--seed", type=int, default=42, help="surrogate shuffling seed")
    p_an.add_argument("--no-sqrt", action="store_true",
                      help="report the plain sum of squared scaled deviations")
    p_an.add_argument("--skip-bad", action="store_true",
                      help="warn and skip series that fail instead of aborting")
    p_an.add_argument("--format", default="csv,json",
                      help="comma-separated subset of csv,json,svg")

    sub.add_parser("table-check", help="regression-check the bundled reference table")

    p_val = sub.add_parser("validate", help="Monte Carlo estimator validation")
    p_val.add_argument("--reps", type=int, default=200, help="replications (minimum 50)")
    p_val.add_argument("--length", type=int, default=4096, help="fGn series length")
    p_val.add_argument("--seed", type=int, default=42, help="base seed")
    p_val.add_argument("--out", help="also write the report to this file")

    p_rad = sub.add_parser("radar", help="render radar SVGs from a results file")
    p_rad.add_argument("results", help="results.csv or results.json from analyze")
    p_rad.add_argument("--out", default=".", help="output directory (default: .)")
    return parser


def _collect_inputs(args):
    """(ticker, path, country) triples from positional inputs and manifest."""
    entries = []
    for item in args.inputs:
        path = Path(item)
        if path.is_dir():
            for child in sorted(path.glob("*.csv")):
                entries.append((child.stem, child, ""))
        else:
            entries.append((path.stem, path, ""))
    if args.manifest:
        manifest = Path(args.manifest)
        base = manifest.parent
        lines = manifest.read_text(encoding="utf-8").splitlines()
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line == "ticker,path,country":
                continue
            parts = [p.strip() for p in line.split(",")]
            if len(parts) not in (2, 3):
                raise EffindexError(
                    f"{manifest}: line {lineno}: expected 'ticker,path[,country]'"
                )
            ticker, rel = parts[0], parts[1]
            country = parts[2] if len(parts) == 3 else ""
            entries.append((ticker, base / rel, country))
    return entries


def _format_float(value):
    return f"{value:.6f}"


def _write_results(records, outdir, formats, cfg, bandwidths, clamped):
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    if "csv" in formats:
        lines = [RESULTS_HEADER] + [rec.to_csv_row() for rec in records]
        path = outdir / "results.csv"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
        written.append(path)
    if "json" in formats:
        payload = [rec.as_dict() for rec in records]
        path = outdir / "results.json"
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8", newline="\n")
        written.append(path)
    metadata = {
        "tool": "effindex",
        "version": __version__,
        "rng": synth.RNG_ALGORITHM,
        "seed": cfg.seed,
        "bandwidth_exponent": cfg.bandwidth_exponent,
        "apen": {
            "m": cfg.apen_m,
            "r_multiplier": cfg.apen_r_multiplier,
            "surrogates": cfg.surrogates,
        },
        "apply_sqrt": cfg.apply_sqrt,
        "bandwidth_per_series": bandwidths,
        "gph_clamped": clamped,
    }
    path = outdir / "metadata.json"
    path.write_text(json.dumps(metadata, indent=2) + "\n", encoding="utf-8", newline="\n")
    written.append(path)
    if "svg" in formats:
        written.extend(_write_radar_files(records, outdir))
    return written


def _write_radar_files(records, outdir):
    outdir.mkdir(parents=True, exist_ok=True)
    tickers = [rec.ticker for rec in records]
    deviation_rows = [rec.deviations for rec in records]
    ei_values = [rec.ei for rec in records]
    written = []
    for name, doc in radar.radar_documents(tickers, deviation_rows, ei_values).items():
        path = outdir / f"{name}.svg"
        path.write_text(doc, encoding="utf-8", newline="\n")
        written.append(path)
    lines = ["ticker,hurst_dev,fractal_dev,entropy_dev,ei"]
    for rec in records:
        devs = ",".join(_format_float(d) for d in rec.deviations)
        lines.append(f"{rec.ticker},{devs},{_format_float(rec.ei)}")
    path = outdir / "deviations.csv"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    written.append(path)
    return written


def cmd_analyze(args):
    formats = {f.strip() for f in args.format.split(",") if f.strip()}
    unknown = formats - {"csv", "json", "svg"}
    if unknown or not formats:
        print(f"effindex: unknown output format(s): {','.join(sorted(unknown))}",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = EfficiencyConfig(
            apply_sqrt=not args.no_sqrt,
            bandwidth_exponent=args.q,
            apen_m=args.apen_m,
            apen_r_multiplier=args.apen_r,
            surrogates=args.surrogates,
            seed=args.seed,
        )
    except ValueError as exc:
        print(f"effindex: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        entries = _collect_inputs(args)
    except (OSError, EffindexError) as exc:
        print(f"effindex: {exc}", file=sys.stderr)
        return EXIT_DATA
    if not entries:
        print("effindex: no input files given", file=sys.stderr)
        return EXIT_USAGE

    records = []
    bandwidths = {}
    clamped = {}
    errors = []
    for ticker, path, country in entries:
        try:
            series = parse_price_csv(path.read_text(encoding="utf-8"), ticker)
            record = analyze_series(
                to_log_returns(series), to_log_prices(series), cfg, country=country
            )
        except (OSError, EffindexError) as exc:
            errors.append(f"{path}: {exc}")
            continue
        records.append(record)
        bandwidths[ticker] = record.details["bandwidth"]
        clamped[ticker] = record.details["gph_clamped"]
        if record.details["gph_clamped"]:
            print(f"effindex: warning: {ticker}: log-periodogram estimate clamped "
                  "into [0, 1)", file=sys.stderr)

    if errors:
        for message in errors:
            print(f"effindex: {'warning' if args.skip_bad else 'error'}: {message}",
                  file=sys.stderr)
        if not args.skip_bad:
            return EXIT_DATA
    if not records:
        print("effindex: no series could be analyzed", file=sys.stderr)
        return EXIT_DATA

    ranked = rank_records(records)
    written = _write_results(ranked, Path(args.out), formats, cfg, bandwidths, clamped)
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


def cmd_table_check(_args):
    results = fixtures.run_table_checks()
    for check in results:
        status = "PASS" if check.passed else "FAIL"
        print(f"[{status}] {check.name}: {check.detail}")
    return EXIT_OK if all(check.passed for check in results) else EXIT_CHECK


def cmd_validate(args):
    if args.reps < 50:
        print(f"effindex: --reps must be at least 50, got {args.reps}", file=sys.stderr)
        return EXIT_USAGE
    if args.length < 64:
        print(f"effindex: --length must be at least 64, got {args.length}", file=sys.stderr)
        return EXIT_USAGE
    rows = validation.run_validation(args.reps, args.length, args.seed)
    report = validation.render_report(rows, args.reps, args.length, args.seed)
    print(report, end="")
    if args.out:
        Path(args.out).write_text(report, encoding="utf-8", newline="\n")
    return EXIT_OK if all(row.passed for row in rows) else EXIT_CHECK


def _load_results(path):
    """Rows of (ticker, hurst, fractal, entropy, ei) from a results file."""
    text = path.read_text(encoding="utf-8")
    rows = []
    if path.suffix.lower() == ".json":
        for item in json.loads(text):
            rows.append(
                (item["ticker"], float(item["hurst"]), float(item["fractal"]),
                 float(item["entropy"]), float(item["ei"]))
            )
        return rows
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != RESULTS_HEADER:
        raise EffindexError(f"{path}: expected header '{RESULTS_HEADER}'")
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 7:
            raise EffindexError(f"{path}: line {lineno}: expected 7 columns")
        try:
            rows.append(
                (parts[0], float(parts[2]), float(parts[3]), float(parts[4]),
                 float(parts[5]))
            )
        except ValueError as exc:
            raise EffindexError(f"{path}: line {lineno}: {exc}") from exc
    if not rows:
        raise EffindexError(f"{path}: no data rows")
    return rows


def cmd_radar(args):
    path = Path(args.results)
    try:
        rows = _load_results(path)
    except (OSError, ValueError, KeyError, EffindexError) as exc:
        print(f"effindex: {exc}", file=sys.stderr)
        return EXIT_DATA
    cfg = EfficiencyConfig()
    tickers = [row[0] for row in rows]
    deviation_rows = [scaled_deviations(h, d, e, cfg) for _, h, d, e, _ in rows]
    ei_values = [row[4] for row in rows]
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, doc in radar.radar_documents(tickers, deviation_rows, ei_values).items():
        target = outdir / f"{name}.svg"
        target.write_text(doc, encoding="utf-8", newline="\n")
        written.append(target)
    lines = ["ticker,hurst_dev,fractal_dev,entropy_dev,ei"]
    for (ticker, _, _, _, ei), devs in zip(rows, deviation_rows):
        devs_text = ",".join(_format_float(d) for d in devs)
        lines.append(f"{ticker},{devs_text},{_format_float(ei)}")
    target = outdir / "deviations.csv"
    target.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    written.append(target)
    for item in written:
        print(f"wrote {item}")
    return EXIT_OK


def main(argv=None):
    args = _build_parser().parse_args(argv)
    handlers = {
        "analyze": cmd_analyze,
        "table-check": cmd_table_check,
        "validate": cmd_validate,
        "radar": cmd_radar,
    }
    return handlers[args.command](args)


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
