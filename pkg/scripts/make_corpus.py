#!/usr/bin/env python3
"""Regenerate the committed test corpus under tests/data/.

The corpus imitates what common CAM packages export for planar XZ work:
different header styles, comment dialects, newline conventions, case and
metadata placement.  Output is deterministic (seeded) so the files only
change when this script does.  Run from the repository root:

    python3 scripts/make_corpus.py
"""

from __future__ import annotations

import math
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "tests" / "data" / "corpus"
INVALID = ROOT / "tests" / "data" / "invalid"


def fusion_num(value: float) -> str:
    """Fusion-style numbers: trailing dot on integral values, else 3 dp."""
    if value == int(value):
        return f"{int(value)}."
    return f"{value:.3f}".rstrip("0")


def spiral_taper() -> str:
    """Fusion-flavored export: %placeholders, T/M6, G28 idiom, D= comment."""
    lines = [
        "%",
        "(1001)",
        "(T1 D=3.175 CR=0. - ZMIN=-1.2 - FLAT END MILL)",
        "G90 G94 G91.1 G40 G49 G17",
        "G21",
        "G28 G91 Z0.",
        "G90",
        "",
        "(SPIRAL TAPER)",
        "T1 M6",
        "S8000 M3",
        "G4 P2.",
        "G0 X-2. Z15.",
        "G0 Z5.",
        "G1 Z-0.5 F250.",
    ]
    x = 0.0
    z = -0.5
    while x < 60.0:
        x += 4.0
        z = -0.5 - 0.7 * (x / 60.0)
        lines.append(f"G1 X{fusion_num(x)} Z{fusion_num(round(z, 3))} F1300.")
    lines += [
        "G1 Z-1.2",
        "G0 Z15.",
        "G28 G91 Z0.",
        "G90",
        "M5",
        "M30",
        "%",
    ]
    return "\n".join(lines) + "\n"


def face_channels() -> str:
    """CRLF export with constant Y0 words, DIA-style tool comment."""
    lines = [
        "(PROJECT: FACE CHANNELS REV C)",
        "(TOOL: FLAT END MILL DIA: 6.35)",
        "G21",
        "G90",
        "G94",
        "S7200 M3",
        "G0 X0. Y0. Z12.",
    ]
    for i in range(6):
        x0 = 5.0 + i * 9.0
        lines += [
            f"G0 X{fusion_num(x0)} Y0. Z2.",
            "G1 Z-0.8 F400.",
            f"G1 X{fusion_num(x0 + 6.0)} Y0. F800.",
            "G1 Z2. F400.",
        ]
    lines += [
        "G0 Z12.",
        "M5",
        "M30",
    ]
    return "\r\n".join(lines) + "\r\n"


def vee_chamfer() -> str:
    """Lowercase words, semicolon comments, unicode diameter mark, no G21."""
    lines = [
        "; vee chamfer strip",
        "; tool Ø3.175 carbide 90deg",
        "g90",
        "g0 x0 z8",
        "g1 z-0.3 f220",
    ]
    x = 0.0
    for _ in range(10):
        x += 3.5
        lines.append(f"g1 x{x:.2f} z-0.3 f600")
        lines.append(f"g1 x{x + 1.5:.2f} z-0.9")
        x += 3.0
        lines.append(f"g1 x{x:.2f} z-0.3")
    lines += [
        "g0 z8",
        "m5",
    ]
    return "\n".join(lines) + "\n"


def long_ripple() -> str:
    """Long profile with a seeded ripple; no S word, mid-stream comment."""
    rng = random.Random(20240817)
    lines = [
        "(ripple profile, post: generic grbl)",
        "(tool D=2.0 ball nose)",
        "G21",
        "G90",
        "G0 X0.000 Z10.000",
        "G0 Z1.000",
        "G1 Z-0.200 F350",
    ]
    for i in range(1, 161):
        x = round(i * 0.45, 3)
        z = round(-0.2 - 0.35 * (1 + math.sin(i / 9.0)) - rng.uniform(0, 0.02), 3)
        feed = " F1000" if i == 1 else ""
        lines.append(f"G1 X{x:.3f} Z{z:.3f}{feed}")
        if i == 80:
            lines.append("(midpoint of the ripple span)")
    lines += [
        "G1 Z1.000",
        "G0 Z10.000",
        "M5",
        "M2",
    ]
    return "\n".join(lines) + "\n"


def plain_slot() -> str:
    """Bare-bones file: no metadata comments, no F word, no units/positioning."""
    lines = [
        "G0 X1 Z4",
        "G1 Z-1.5",
        "G1 X26",
        "G1 Z4",
        "G0 X1",
    ]
    return "\n".join(lines) + "\n"


def two_line() -> str:
    """Smallest convertible toolpath; kept verbatim for golden comparisons."""
    return "G1 X0 Z-1 F300\nG1 X10 Z-1\n"


def arc_attempt() -> str:
    """Rejected input: contains arc motion."""
    lines = [
        "(arc fillet demo)",
        "G21",
        "G90",
        "G0 X0 Z5",
        "G1 Z-1 F300",
        "G2 X10 Z-1 I5 K0",
        "G0 Z5",
    ]
    return "\n".join(lines) + "\n"


def torn_word() -> str:
    """Rejected input: a letter with no number (truncated export)."""
    return "G21\nG90\nG0 X0 Z5\nG1 X\n"


def main() -> None:
    CORPUS.mkdir(parents=True, exist_ok=True)
    INVALID.mkdir(parents=True, exist_ok=True)
    files = {
        CORPUS / "spiral_taper.nc": spiral_taper(),
        CORPUS / "face_channels.gcode": face_channels(),
        CORPUS / "vee_chamfer.txt": vee_chamfer(),
        CORPUS / "long_ripple.nc": long_ripple(),
        CORPUS / "plain_slot.nc": plain_slot(),
        CORPUS / "two_line.nc": two_line(),
        INVALID / "arc_attempt.nc": arc_attempt(),
        INVALID / "torn_word.nc": torn_word(),
    }
    for path, text in files.items():
        path.write_bytes(text.encode("utf-8"))
        print(f"wrote {path.relative_to(ROOT)} ({len(text.encode('utf-8'))} bytes)")


if __name__ == "__main__":
    main()
