"""Command-line surface: sieve, verify, figure, bench.

Exit codes are a stable contract: 0 success, 1 property failure or sieve
mismatch, 2 usage error (including a composite p), 3 I/O failure.  Data
goes to stdout, diagnostics to stderr.  FOCAL_SIEVE_THREADS caps the
verify sweep's process pool; the default is the single-process
deterministic path.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .plane import NotPrimeError, new_context
from .render import (
    RenderOptions,
    Window,
    make_window,
    render_detail,
    render_quotient_distribution,
    render_quotient_remainder,
    render_sieve,
)
from .sieve import primes_classic, sieve_classic, sieve_geometric
from .verify import PROPERTIES, run_verification, sweep_workers

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="focal-sieve",
        description="Geometric prime sieve: sieve (p, p^2), verify its "
        "invariants, render figures, benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sieve = sub.add_parser("sieve", help="list the primes in (p, p^2)")
    p_sieve.add_argument("--p", type=int, required=True, help="prime base")
    p_sieve.add_argument(
        "--method",
        choices=["geometric", "classic", "both"],
        default="geometric",
        help="sieving route; 'both' compares them and fails on mismatch",
    )
    p_sieve.add_argument(
        "--format", choices=["text", "json", "csv"], default="text"
    )

    p_verify = sub.add_parser("verify", help="sweep properties over primes <= p-max")
    p_verify.add_argument("--p-max", type=int, required=True)
    p_verify.add_argument(
        "--properties",
        default=",".join(PROPERTIES),
        help="comma-separated subset of: " + ", ".join(PROPERTIES),
    )
    p_verify.add_argument(
        "--workers",
        type=int,
        default=None,
        help="process-pool size (default: FOCAL_SIEVE_THREADS or 1)",
    )

    p_figure = sub.add_parser("figure", help="write an SVG figure")
    p_figure.add_argument("--p", type=int, required=True)
    p_figure.add_argument(
        "--which", choices=["sieve", "detail", "quotients", "qr"], required=True
    )
    p_figure.add_argument("--out", required=True, help="output .svg path")
    p_figure.add_argument("--width", type=int, default=900)
    p_figure.add_argument("--height", type=int, default=900)
    p_figure.add_argument(
        "--window",
        default=None,
        help="x_min,x_max,y_min,y_max in plane coordinates (rationals allowed)",
    )
    p_figure.add_argument("--max-lines", type=int, default=3)
    p_figure.add_argument("--stroke-width", type=float, default=1.0)
    p_figure.add_argument(
        "--palette-config",
        default=None,
        help="JSON file mapping palette roles to colors",
    )

    p_bench = sub.add_parser("bench", help="time geometric vs classic per prime")
    p_bench.add_argument("--p-max", type=int, required=True)
    p_bench.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _usage_error(message: str) -> int:
    print(f"focal-sieve: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _cmd_sieve(args: argparse.Namespace) -> int:
    ctx = new_context(args.p)
    verdict = None
    if args.method == "classic":
        result = sieve_classic(ctx)
    else:
        result = sieve_geometric(ctx)
        if args.method == "both":
            oracle = sieve_classic(ctx)
            verdict = "MATCH" if result.primes == oracle.primes else "MISMATCH"

    if args.format == "json":
        payload = result.to_json()
        if args.method == "both":
            payload["method"] = "both"
            payload["verdict"] = verdict
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        sys.stdout.write(result.to_csv())
        if verdict is not None:
            print(f"verdict: {verdict}", file=sys.stderr)
    else:
        print(f"p = {ctx.p}  method = {args.method}  count = {len(result.primes)}")
        print(" ".join(str(n) for n in result.primes))
        if verdict is not None:
            print(f"verdict: {verdict}")
    return EXIT_OK if verdict in (None, "MATCH") else EXIT_FAILURE


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.p_max < 2:
        return _usage_error(f"--p-max must be >= 2, got {args.p_max}")
    names = [n.strip() for n in args.properties.split(",") if n.strip()]
    unknown = [n for n in names if n not in PROPERTIES]
    if unknown:
        return _usage_error(f"unknown properties: {', '.join(unknown)}")
    workers = args.workers if args.workers is not None else sweep_workers()
    report = run_verification(args.p_max, names, workers=workers)
    print(json.dumps(report.to_json(), indent=2))
    return EXIT_OK if report.ok else EXIT_FAILURE


def _parse_window(text: str) -> Window:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"window needs 4 comma-separated values, got {text!r}")
    x_min, x_max, y_min, y_max = (Fraction(part) for part in parts)
    return make_window(x_min, x_max, y_min, y_max)


def _load_palette(path: str) -> dict[str, str]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in data.items()
    ):
        raise ValueError(f"palette config must map role names to colors: {path}")
    return data


def _cmd_figure(args: argparse.Namespace) -> int:
    ctx = new_context(args.p)
    palette = _load_palette(args.palette_config) if args.palette_config else {}
    window = _parse_window(args.window) if args.window else None
    opts = RenderOptions(
        width_px=args.width,
        height_px=args.height,
        window=window,
        palette=palette,
        max_lines_per_family=args.max_lines,
        stroke_width=args.stroke_width,
    )
    if args.which == "sieve":
        doc = render_sieve(ctx, opts)
    elif args.which == "detail":
        doc = render_detail(ctx, window, opts)
    elif args.which == "quotients":
        doc = render_quotient_distribution(ctx, opts)
    else:
        doc = render_quotient_remainder(ctx, opts)

    try:
        Path(args.out).write_text(doc, encoding="utf-8")
    except OSError as exc:
        print(f"focal-sieve: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(
        f"{args.out}: {doc.count('<circle')} points, {doc.count('<line')} lines, "
        f"{doc.count('<polyline')} curves, {doc.count('<text')} labels"
    )
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.p_max < 2:
        return _usage_error(f"--p-max must be >= 2, got {args.p_max}")
    rows = []
    for p in primes_classic(1, args.p_max + 1):
        ctx = new_context(p)
        start = time.perf_counter()
        sieve_geometric(ctx)
        geom_ms = (time.perf_counter() - start) * 1000.0
        start = time.perf_counter()
        primes_classic(ctx.p, ctx.p_squared)
        classic_ms = (time.perf_counter() - start) * 1000.0
        rows.append({"p": p, "geomMs": geom_ms, "classicMs": classic_ms})

    if args.format == "json":
        print(json.dumps({"rows": rows}, indent=2))
    else:
        print(f"{'p':>8} {'geomMs':>12} {'classicMs':>12}")
        for row in rows:
            print(f"{row['p']:>8} {row['geomMs']:>12.3f} {row['classicMs']:>12.3f}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        if args.command == "sieve":
            return _cmd_sieve(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "figure":
            return _cmd_figure(args)
        return _cmd_bench(args)
    except NotPrimeError as exc:
        return _usage_error(str(exc))
    except (ValueError, ZeroDivisionError) as exc:
        return _usage_error(str(exc))
    except OSError as exc:
        print(f"focal-sieve: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
