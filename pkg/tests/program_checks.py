"""Structural walkers over converted rotary programs, shared by tests."""

from __future__ import annotations

import re

PASS_COMMENT_RE = re.compile(r"^\(pass (\d+)/(\d+): Y=([0-9.]+)\)$")
FEED_LINE_RE = re.compile(r"^F[0-9.]+$")
INDEX_LINE_RE = re.compile(r"^G0 Y([0-9.]+)$")


def block_starts(lines: list[str]) -> list[int]:
    return [i for i, ln in enumerate(lines) if PASS_COMMENT_RE.match(ln)]


def toolpath_regions(lines: list[str], toolpath_len: int) -> list[list[str]]:
    """Per-pass toolpath slices: everything after each block's feed restatement."""
    regions = []
    for start in block_starts(lines):
        i = start
        while i < len(lines) and not FEED_LINE_RE.match(lines[i]):
            i += 1
        regions.append(lines[i + 1 : i + 1 + toolpath_len])
    return regions


def index_moves(lines: list[str]) -> list[tuple[int, str]]:
    """(line index, Y text) for every synthesized G0 index move."""
    return [
        (i, m.group(1))
        for i, ln in enumerate(lines)
        if (m := INDEX_LINE_RE.match(ln))
    ]


def assert_safety_protocol(lines: list[str], spindle_off: str = "M5", spindle_on: str = "M3") -> None:
    """Every rotation happens stopped and retracted; pass indexes restart after.

    The final return-to-zero is rotation too, so it needs the stop and
    retract, but the spindle stays off once the program is done.
    """
    moves = index_moves(lines)
    assert moves, "no index moves found"
    starts = block_starts(lines)
    for i, _ in moves:
        block_start = max((s for s in starts if s <= i), default=0)
        window = lines[block_start:i]
        assert any(ln == spindle_off for ln in window), f"no {spindle_off} before index at line {i}"
        assert any(ln.startswith("G0 Z") for ln in window), f"no retract before index at line {i}"
    for i, _ in moves[:-1]:
        assert lines[i + 1].startswith(spindle_on), f"no {spindle_on} after index at line {i}"
    assert moves[-1][1] == "0.0000", "program must rewind the rotary axis to zero"
