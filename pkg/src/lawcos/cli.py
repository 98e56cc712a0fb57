"""Command line entry point.

Exit codes: 0 every check passed, 1 some check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .batch import batch_random, summary_dict
from .comparisons import build_comparisons
from .exact_geom import GeometryError
from .parsing import ParseError, parse_scalar, parse_triangle, triangle_from_sides
from .report import emit_report
from .svg import RenderOptions, render_svg
from .verify import ALL_INCLUDES, FAIL, PASS, run_all

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _use_color(stream) -> bool:
    return not os.environ.get("LAWCOS_NO_COLOR") and hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, code: str, on: bool) -> str:
    return f"\033[{code}m{text}\033[0m" if on else text


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def _parse_include(text: str | None) -> frozenset:
    if text is None:
        return ALL_INCLUDES
    items = frozenset(s.strip() for s in text.split(",") if s.strip())
    unknown = items - ALL_INCLUDES
    if unknown:
        raise ParseError(f"unknown --include item(s): {', '.join(sorted(unknown))}", 0)
    return items


def cmd_verify(args) -> int:
    err = sys.stderr
    try:
        include = _parse_include(args.include)
        notes = []
        if args.sides:
            a, b, c = (parse_scalar(s) for s in args.sides)
            placed = triangle_from_sides(a, b, c, args.denominator_bound)
            points = placed.points
            notes.append(placed.note)
            if placed.perturbed:
                print(f"WARNING: {placed.note}", file=err)
        else:
            points = parse_triangle(args.points)
        report = run_all(*points, include=include)
    except (ParseError, GeometryError, ValueError) as exc:
        print(f"input error: {exc}", file=err)
        return EXIT_INPUT
    report.notes.extend(notes)

    color = _use_color(sys.stdout)
    if args.report != "-":
        for c in report.checks:
            tag = {PASS: _paint("pass", "32", color), FAIL: _paint("FAIL", "31", color)}.get(
                c.status, _paint("skip", "33", color)
            )
            extra = f"  residual={c.residual}" if c.status == FAIL else ""
            print(f"{tag}  {c.name}{extra}")
        ch = report.chain
        print(f"case: {report.case.orientation}; {report.case.summary()}")
        print(f"BC^2 + CA^2 - AB^2 = {ch.sides} = 4*[blue] = {ch.blue_quadruple} = 2*dot(CA,CB) = {2 * ch.dot_cab}")
    if args.report:
        _write(args.report, emit_report(report))
    if args.svg:
        comps = report.comparisons or build_comparisons(report.figure)
        _write(args.svg, render_svg(report.figure, comps, RenderOptions(width_px=args.width)))
    return EXIT_OK if report.all_pass else EXIT_FAIL


def cmd_batch(args) -> int:
    try:
        summary = batch_random(args.count, args.seed, args.bound, workers=args.workers)
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    color = _use_color(sys.stdout)
    status = _paint("all checks pass", "32", color) if summary.ok else _paint(
        f"{len(summary.failures)} failing triangle(s)", "31", color
    )
    print(
        f"{summary.count} triangles (seed {summary.seed}, bound {summary.coordinate_bound}): "
        f"{summary.checks_run} checks run, {summary.checks_skipped} skipped, {status} "
        f"in {summary.elapsed:.2f}s"
    )
    for tri, names in summary.failures[:20]:
        print(f"  {tri}: {', '.join(names)}")
    if args.report:
        _write(args.report, json.dumps(summary_dict(summary), indent=2) + "\n")
    return EXIT_OK if summary.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lawcos", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify one triangle")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--points", help='"x,y x,y x,y" for A, B, C (integers, decimals or p/q)')
    src.add_argument("--sides", nargs=3, metavar=("BC", "CA", "AB"), help="side lengths instead of points")
    v.add_argument("--denominator-bound", type=int, default=1000,
                   help="largest denominator for a rationalized height (with --sides)")
    v.add_argument("--include", help="comma list from: euclid,parallelograms,disjointness (default all)")
    v.add_argument("--report", help="write the JSON report here ('-' for stdout)")
    v.add_argument("--svg", help="write the SVG figure here ('-' for stdout)")
    v.add_argument("--width", type=int, default=800, help="SVG width in pixels")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("batch", help="verify random integer triangles")
    b.add_argument("--count", type=int, default=1000)
    b.add_argument("--seed", type=int, default=42)
    b.add_argument("--bound", type=int, default=100)
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--report", help="write the JSON summary here ('-' for stdout)")
    b.set_defaults(func=cmd_batch)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
