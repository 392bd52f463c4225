"""Command-line front end for the rotary post-processor.

Reads a planar XZ G-code file, prints the indexing plan, writes the
converted rotary program and optional preview artifacts.  Exit codes:
0 success, 1 validation or domain error, 2 I/O or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .gcode import GcodeParseError, extract_metadata, parse_program, serialize
from .geometry import export_mesh, extract_polyline, preview_2d, revolve
from .indexing import DEFAULT_OVERLAP, IndexingParams, IndexingPlan, make_plan
from .transform import (
    ConversionError,
    MachineProfile,
    convert,
    sanitize_toolpath,
)

PLOT_FORMAT_NOTE = "json plot document"


def _safe_z_value(text: str) -> float | str:
    if text.lower() == "auto":
        return "auto"
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"safe Z must be a number or 'auto', not {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotary-post",
        description=(
            "Convert a planar XZ G-code toolpath into an indexed-rotary "
            "program for a GRBL machine whose Y axis drives the rotary fixture."
        ),
    )
    parser.add_argument("input", help="planar G-code file (.gcode/.nc/.txt)")
    parser.add_argument("-o", "--output", help="destination for the converted program")

    stock = parser.add_mutually_exclusive_group(required=True)
    stock.add_argument("--stock-diameter", type=float, help="stock diameter in mm")
    stock.add_argument("--stock-radius", type=float, help="stock radius in mm")
    parser.add_argument(
        "--tool-diameter",
        type=float,
        help="tool diameter in mm (default: from file comments, else 3.175)",
    )

    source = parser.add_mutually_exclusive_group()
    source.add_argument(
        "--overlap",
        type=float,
        help=f"pass overlap factor in (0, 1] (default {DEFAULT_OVERLAP})",
    )
    source.add_argument(
        "--tolerance",
        type=float,
        help="max faceting error in mm; picks the pass count to stay under it",
    )
    source.add_argument("--passes", type=int, help="explicit number of indexed passes")

    parser.add_argument(
        "--diameter-basis",
        choices=("stock", "toolpath"),
        default="toolpath",
        help="circumference the pass width is spread over (default toolpath)",
    )
    parser.add_argument(
        "--safe-z",
        type=_safe_z_value,
        default="auto",
        help="retract height in mm, or 'auto' for max toolpath Z + 5 (default auto)",
    )
    feed = parser.add_mutually_exclusive_group()
    feed.add_argument("--feed-override", type=float, help="replace all feedrates (mm/min)")
    feed.add_argument("--feed-scale", type=float, help="scale all feedrates by a factor in (0, 1]")

    parser.add_argument("--export-obj", metavar="PATH", help="write the revolved mesh as Wavefront OBJ")
    parser.add_argument("--export-plot", metavar="PATH", help=f"write the 2D toolpath preview ({PLOT_FORMAT_NOTE})")
    parser.add_argument("--plan-only", action="store_true", help="print the plan without writing G-code")
    parser.add_argument("--strict", action="store_true", help="treat validation warnings as errors")
    return parser


def _read_text(path: str) -> tuple[str, str]:
    """File text plus the encoding that decoded it (used again on write)."""
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8"), "utf-8"
    except UnicodeDecodeError:
        return data.decode("latin-1"), "latin-1"


def print_plan(plan: IndexingPlan, params: IndexingParams, file=None) -> None:
    out = file or sys.stdout
    print(f"plan source: {plan.source}", file=out)
    print(
        f"diameter basis: {params.diameter_basis} ({plan.basis_diameter:.4f} mm)",
        file=out,
    )
    print(plan.describe(), file=out)
    print(f"pass width: {plan.pass_width:.4f} mm", file=out)
    print(
        f"predicted facet sagitta: {plan.predicted_sagitta:.6f} mm "
        f"at stock radius {params.stock_radius:.4f} mm",
        file=out,
    )


def run(args: argparse.Namespace) -> int:
    try:
        text, encoding = _read_text(args.input)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return 2

    try:
        program = parse_program(text, source_name=args.input)
    except GcodeParseError as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return 1

    metadata = extract_metadata(program, tool_diameter_override=args.tool_diameter)
    stock_diameter = (
        args.stock_diameter if args.stock_diameter is not None else 2.0 * args.stock_radius
    )
    try:
        params = IndexingParams(
            stock_diameter=stock_diameter,
            tool_diameter=metadata.tool_diameter,
            overlap=args.overlap if args.overlap is not None else DEFAULT_OVERLAP,
            error_tolerance=args.tolerance,
            explicit_passes=args.passes,
            diameter_basis=args.diameter_basis,
        )
        plan = make_plan(params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    print_plan(plan, params)
    if metadata.tool_diameter_source == "fallback":
        print(
            f"warning: no tool diameter found in {args.input}; "
            f"using fallback {metadata.tool_diameter:g} mm",
            file=sys.stderr,
        )

    if not args.plan_only and not args.output:
        print("error: --output is required unless --plan-only is given", file=sys.stderr)
        return 2

    try:
        if args.export_obj or args.export_plot:
            sanitized, _ = sanitize_toolpath(program)
            polyline = extract_polyline(sanitized)
            if args.export_plot:
                doc = preview_2d(polyline)
                Path(args.export_plot).write_text(json.dumps(doc, indent=2) + "\n")
                print(f"wrote 2D preview to {args.export_plot}")
            if args.export_obj:
                mesh = revolve(polyline, plan.num_passes)
                Path(args.export_obj).write_bytes(export_mesh(mesh, "wavefront-obj"))
                print(f"wrote mesh ({mesh.stations}x{mesh.profile_points} vertices) to {args.export_obj}")

        if args.plan_only:
            return 0

        profile = MachineProfile(
            safe_z=args.safe_z,
            feed_override=args.feed_override,
            feed_scale=args.feed_scale,
        )
        result = convert(program, plan, profile, metadata)
    except ConversionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    for note in result.warnings:
        print(f"warning: {note}", file=sys.stderr)
    if args.strict and result.warnings:
        print(
            f"error: {len(result.warnings)} warning(s) with --strict; nothing written",
            file=sys.stderr,
        )
        return 1

    try:
        Path(args.output).write_bytes(serialize(result.program).encode(encoding))
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return 2
    stats = result.stats
    print(
        f"wrote {args.output}: {stats['pass_count']:.0f} passes, "
        f"{stats['output_line_count']:.0f} lines, "
        f"final index {stats['total_index_angle']:.4f} deg"
    )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
