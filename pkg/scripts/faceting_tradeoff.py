#!/usr/bin/env python3
"""Tabulate what coarse indexing costs and what fine indexing buys.

For each station count N the table reports the closed-form facet
sagitta at the stock surface, its quadratic approximation, the
deviation measured by brute-force sampling of a revolved cylinder, and
the length of the converted program for a small demo toolpath.  The
sagitta shrinks with 1/N^2 while the program grows linearly in N, which
is the whole trade-off in two columns.
"""

from __future__ import annotations

import argparse
import csv
import sys

from grbl_rotary.gcode import parse_program
from grbl_rotary.geometry import extract_polyline, max_radial_deviation, revolve
from grbl_rotary.indexing import (
    IndexingParams,
    make_plan,
    sagitta_error,
    sagitta_error_approx,
)
from grbl_rotary.transform import MachineProfile, convert

DEMO_TOOLPATH = "G21\nG90\nG0 X0 Z5\nG1 X30 Z-1 F300\nG1 X0 Z-1\n"

COLUMNS = (
    "stations",
    "angle_deg",
    "sagitta_mm",
    "quadratic_mm",
    "measured_mm",
    "closed_vs_measured_mm",
    "program_lines",
)


def sweep(stock_radius: float, stations: list[int], samples: int) -> list[dict]:
    cylinder = extract_polyline(
        parse_program(f"G0 X0 Z{stock_radius}\nG1 X30 F200\n")
    )
    demo = parse_program(DEMO_TOOLPATH)
    rows = []
    for n in stations:
        plan = make_plan(
            IndexingParams(2.0 * stock_radius, 3.175, explicit_passes=n)
        )
        closed = sagitta_error(stock_radius, n)
        measured = max_radial_deviation(
            revolve(cylinder, n), stock_radius, samples_per_edge=samples
        )
        result = convert(demo, plan, MachineProfile())
        rows.append(
            {
                "stations": n,
                "angle_deg": plan.angle_per_pass,
                "sagitta_mm": closed,
                "quadratic_mm": sagitta_error_approx(stock_radius, n),
                "measured_mm": measured,
                "closed_vs_measured_mm": abs(closed - measured),
                "program_lines": int(result.stats["output_line_count"]),
            }
        )
    return rows


def print_table(rows: list[dict], file=sys.stdout) -> None:
    widths = {c: max(len(c), 12) for c in COLUMNS}
    print("  ".join(c.rjust(widths[c]) for c in COLUMNS), file=file)
    for row in rows:
        cells = []
        for c in COLUMNS:
            v = row[c]
            cells.append(
                (f"{v:d}" if isinstance(v, int) else f"{v:.6f}").rjust(widths[c])
            )
        print("  ".join(cells), file=file)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--stock-radius", type=float, default=11.0)
    parser.add_argument(
        "--stations",
        type=int,
        nargs="+",
        default=[8, 16, 22, 33, 48, 80, 120],
        help="pass counts to sweep",
    )
    parser.add_argument(
        "--samples",
        type=int,
        default=100,
        help="sampling density per facet edge for the measured column",
    )
    parser.add_argument("--csv", metavar="PATH", help="also write the table as CSV")
    args = parser.parse_args(argv)

    rows = sweep(args.stock_radius, args.stations, args.samples)
    print_table(rows)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=COLUMNS)
            writer.writeheader()
            writer.writerows(rows)
        print(f"wrote {args.csv}")
    coarse, fine = rows[0], rows[-1]
    print(
        f"\n{coarse['stations']} -> {fine['stations']} stations: "
        f"sagitta {coarse['sagitta_mm']:.4f} -> {fine['sagitta_mm']:.4f} mm "
        f"({coarse['sagitta_mm'] / fine['sagitta_mm']:.1f}x better), "
        f"program {coarse['program_lines']} -> {fine['program_lines']} lines"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
