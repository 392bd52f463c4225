"""Indexed-rotary program synthesis.

Takes a sanitized planar XZ toolpath plus an indexing plan and emits the
full rotary program: a units/positioning header, then one block per
angular station (spindle stop, retract, absolute Y index, spindle
restart with dwell, restated feed, the toolpath verbatim), then a
trailer that parks the spindle and rewinds Y to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .gcode import (
    GcodeLine,
    GcodeProgram,
    ToolMetadata,
    ValidationReport,
    extract_metadata,
    format_number,
    make_line,
    parse_line,
    strip_axis,
    validate_planar,
)
from .indexing import IndexingPlan

SAFE_Z_CLEARANCE = 5.0
DEFAULT_DWELL_SECONDS = 2.0


class ConversionError(ValueError):
    """Conversion refused; carries the validation report when one exists."""

    def __init__(self, message: str, report: ValidationReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class MachineProfile:
    """Safety and emission parameters for the synthesized program."""

    safe_z: float | str = "auto"
    spindle_on_command: str = "M3"
    spindle_speed: float | None = None
    spindle_off_command: str = "M5"
    dwell_after_restart: float = DEFAULT_DWELL_SECONDS
    feed_override: float | None = None
    feed_scale: float | None = None
    decimals: int = 4

    def __post_init__(self):
        if isinstance(self.safe_z, str) and self.safe_z != "auto":
            raise ValueError('safe_z must be a height in mm or "auto"')
        if self.feed_override is not None and self.feed_scale is not None:
            raise ValueError("set feed_override or feed_scale, not both")
        if self.feed_override is not None and self.feed_override <= 0:
            raise ValueError("feed override must be positive")
        if self.feed_scale is not None and not 0 < self.feed_scale <= 1:
            raise ValueError("feed scale must be in (0, 1]")
        if self.dwell_after_restart < 0:
            raise ValueError("dwell must not be negative")
        if self.decimals < 0:
            raise ValueError("decimals must not be negative")

    @property
    def has_feed_policy(self) -> bool:
        return self.feed_override is not None or self.feed_scale is not None


@dataclass
class ConversionResult:
    program: GcodeProgram
    plan: IndexingPlan
    metadata: ToolMetadata
    warnings: list[str] = field(default_factory=list)
    stats: dict[str, float] = field(default_factory=dict)


def sanitize_toolpath(program: GcodeProgram) -> tuple[GcodeProgram, list[str]]:
    """Prepare a planar toolpath for replication.

    Strips Y words (the machine's rotary axis must never see toolpath
    motion), drops program-end lines (M2/M30 and bare % markers would
    stop the machine after the first pass) and normalizes every line to
    LF.  Returns the cleaned program and human-readable notes about what
    was removed.
    """
    notes: list[str] = []
    y_lines = [
        ln.number
        for ln in program.lines
        if ln.kind == "motion" and ln.words_with("Y")
    ]
    if y_lines:
        notes.append(
            f"removed Y words from {len(y_lines)} toolpath line(s) "
            f"(first at line {y_lines[0]})"
        )
    stripped = strip_axis(program, "Y")
    kept: list[GcodeLine] = []
    for line in stripped.lines:
        if line.has_m(2, 30):
            notes.append(f"dropped program-end M{2 if line.has_m(2) else 30} at line {line.number}")
            continue
        if line.kind == "other" and line.raw.strip() == "%":
            notes.append(f"dropped % marker at line {line.number}")
            continue
        if line.newline != "\n":
            line = replace(line, newline="\n")
        kept.append(line)
    return GcodeProgram(lines=kept, source_name=program.source_name), notes


def resolve_safe_z(program: GcodeProgram, profile: MachineProfile) -> float:
    """Retract height for index moves.

    "auto" clears the highest Z in the toolpath by a fixed margin; a
    numeric height below that maximum is a collision and is refused.
    """
    z_values = [w.numeric for line in program.lines for w in line.words_with("Z")]
    max_z = max(z_values) if z_values else 0.0
    if profile.safe_z == "auto":
        return max_z + SAFE_Z_CLEARANCE
    safe_z = float(profile.safe_z)
    if safe_z < max_z:
        raise ConversionError(
            f"safe Z {safe_z:g} is below the toolpath maximum Z {max_z:g}"
        )
    return safe_z


def apply_feed_policy(line: GcodeLine, profile: MachineProfile) -> GcodeLine:
    """Rewrite F words per the profile's override or scale.

    Lines without an F word pass through untouched; in particular rapids
    never gain one.  With no policy set this is the identity.
    """
    if not profile.has_feed_policy:
        return line
    f_words = line.words_with("F")
    if not f_words:
        return line
    raw = line.raw
    for w in sorted(f_words, key=lambda w: w.start, reverse=True):
        if profile.feed_override is not None:
            value = profile.feed_override
        else:
            value = w.numeric * profile.feed_scale
        raw = raw[: w.start] + "F" + format_number(value, profile.decimals) + raw[w.end :]
    return parse_line(raw, number=line.number, newline=line.newline)


def _policy_feed(feedrate: float, profile: MachineProfile) -> float:
    if profile.feed_override is not None:
        return profile.feed_override
    if profile.feed_scale is not None:
        return feedrate * profile.feed_scale
    return feedrate


def _first_spindle_speed(program: GcodeProgram) -> float | None:
    for line in program.lines:
        s = line.word("S")
        if s is not None and s.numeric > 0:
            return s.numeric
    return None


def convert(
    program: GcodeProgram,
    plan: IndexingPlan,
    profile: MachineProfile | None = None,
    metadata: ToolMetadata | None = None,
) -> ConversionResult:
    """Emit the indexed-rotary program for a planar XZ toolpath.

    The input is sanitized first; fatal planarity violations in the
    sanitized toolpath (arcs, incremental-mode motion) refuse the
    conversion with the full validation report attached.
    """
    if profile is None:
        profile = MachineProfile()
    toolpath, notes = sanitize_toolpath(program)
    report = validate_planar(toolpath)
    if not report.ok:
        raise ConversionError(
            "input is not a convertible planar toolpath:\n" + report.describe(),
            report,
        )
    if metadata is None:
        metadata = extract_metadata(program)
    safe_z = resolve_safe_z(toolpath, profile)

    def num(v: float) -> str:
        return format_number(v, profile.decimals)

    inch_mode = any(line.has_g(20) for line in toolpath.lines)
    units_line = "G20" if inch_mode else "G21"
    speed = profile.spindle_speed
    if speed is None:
        speed = _first_spindle_speed(program)
    restart = profile.spindle_on_command
    if speed is not None:
        restart += f" S{speed:g}"
    feed = _policy_feed(metadata.feedrate, profile)
    toolpath_lines = [apply_feed_policy(line, profile) for line in toolpath.lines]

    out: list[GcodeLine] = []

    def emit(text: str) -> None:
        out.append(make_line(text))

    n = plan.num_passes
    theta = plan.angle_per_pass
    emit(f"(indexed rotary conversion: {n} passes, {num(theta)} deg per pass)")
    emit(units_line)
    emit("G90")
    for k in range(n):
        angle = k * theta
        emit(f"(pass {k + 1}/{n}: Y={num(angle)})")
        # restate units/positioning so a block is safe even if the
        # previous pass left G91 or other modal residue active
        emit(units_line)
        emit("G90")
        emit(profile.spindle_off_command)
        emit(f"G0 Z{num(safe_z)}")
        emit(f"G0 Y{num(angle)}")
        emit(restart)
        if profile.dwell_after_restart > 0:
            emit(f"G4 P{num(profile.dwell_after_restart)}")
        emit(f"F{num(feed)}")
        out.extend(toolpath_lines)
    emit(profile.spindle_off_command)
    emit(units_line)
    emit("G90")
    emit(f"G0 Z{num(safe_z)}")
    emit(f"G0 Y{num(0.0)}")
    emit("(program end)")

    warnings = notes + [f"{v.code}: {v.describe()}" for v in report.warnings]
    if metadata.feedrate_source == "fallback" and profile.has_feed_policy:
        warnings.append(
            f"no feedrate found in the input; restated feed uses the "
            f"{metadata.feedrate:g} mm/min fallback"
        )
    result_program = GcodeProgram(lines=out, source_name=program.source_name)
    stats = {
        "output_line_count": float(len(out)),
        "pass_count": float(n),
        "total_index_angle": theta * (n - 1),
    }
    return ConversionResult(
        program=result_program,
        plan=plan,
        metadata=metadata,
        warnings=warnings,
        stats=stats,
    )
