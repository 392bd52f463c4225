"""GRBL-dialect G-code lexing, serialization and sanitizing.

The parser is deliberately conservative: it keeps the original text of
every line (and its line terminator) so that untouched lines round-trip
byte for byte, and it records the character span of every word so that
edits (axis stripping, feed rewriting) can splice the raw text instead
of reformatting the whole line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

#: Letters that address a machine axis.
AXIS_LETTERS = frozenset("XYZABCUVW")

#: G numbers that command motion directly (G28/G30 move via stored positions).
MOTION_G_CODES = frozenset({0, 1, 2, 3, 28, 30})

#: Canned-cycle G numbers GRBL cannot execute.
CANNED_CYCLE_G_CODES = frozenset({73, 74, 76, 81, 82, 83, 84, 85, 86, 87, 88, 89})

#: Compensation modes this pipeline does not honor (cancel codes 40/49 are fine).
COMPENSATION_G_CODES = frozenset({41, 42, 43})

LINE_KINDS = ("motion", "modal", "comment_only", "blank", "other")

#: Fallbacks used when the source file carries no tool/feed metadata.
DEFAULT_TOOL_DIAMETER = 3.175
DEFAULT_FEEDRATE = 1000.0

_NUMBER_RE = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)")

# Tool-diameter patterns found in CAM comments, in priority order per match
# position: Fusion-style "D=3.175", "DIA 6.35" (optional ':' or '='), "Ø3.175".
_DIAMETER_RE = re.compile(
    r"(?:(?<![A-Za-z])D\s*=\s*|DIA\.?\s*[:=]?\s*|[Øø⌀]\s*)(\d+\.?\d*|\.\d+)",
    re.IGNORECASE,
)


class GcodeParseError(ValueError):
    """Raised when a source line cannot be tokenized.

    Carries the 1-based ``line`` and ``column`` of the offending character.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Word:
    """One letter-address word, e.g. ``X-1.25``.

    ``text`` is the number exactly as written so unmodified words serialize
    back to their source bytes.  ``start``/``end`` locate the whole word in
    the raw line (-1 for synthesized words).
    """

    letter: str
    text: str
    numeric: float
    start: int = -1
    end: int = -1

    def as_gcode(self) -> str:
        return f"{self.letter}{self.text}"


@dataclass(frozen=True)
class GcodeLine:
    raw: str
    words: tuple[Word, ...]
    comments: tuple[str, ...]
    kind: str
    newline: str = "\n"
    number: int = 0  # 1-based source line, 0 for synthesized lines

    def word(self, letter: str) -> Word | None:
        """First word with the given letter, or None."""
        for w in self.words:
            if w.letter == letter:
                return w
        return None

    def words_with(self, letter: str) -> list[Word]:
        return [w for w in self.words if w.letter == letter]

    def has_g(self, *numbers: float) -> bool:
        # exact match: G91.1 is not G91, G28.1 is not G28
        return any(w.letter == "G" and w.numeric in numbers for w in self.words)

    def has_m(self, *numbers: float) -> bool:
        return any(w.letter == "M" and w.numeric in numbers for w in self.words)


@dataclass
class GcodeProgram:
    lines: list[GcodeLine] = field(default_factory=list)
    source_name: str = ""

    def __iter__(self):
        return iter(self.lines)

    def __len__(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class ToolMetadata:
    """Tool diameter and feedrate recovered from the source file.

    Each value tracks where it came from: ``comment`` (extracted from the
    file), ``fallback`` (builtin default) or ``user`` (explicit override).
    """

    tool_diameter: float
    feedrate: float
    tool_diameter_source: str
    feedrate_source: str

    def __post_init__(self):
        if self.tool_diameter <= 0:
            raise ValueError("tool diameter must be positive")
        if self.feedrate <= 0:
            raise ValueError("feedrate must be positive")

    @property
    def provenance(self) -> str:
        """Where the tool diameter came from; the field that drives planning."""
        return self.tool_diameter_source


@dataclass(frozen=True)
class Violation:
    severity: str  # "fatal" | "warning"
    code: str
    message: str
    line: int | None = None

    def describe(self) -> str:
        where = f" at line {self.line}" if self.line else ""
        return f"{self.message}{where}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def fatal(self) -> list[Violation]:
        return [v for v in self.violations if v.severity == "fatal"]

    @property
    def warnings(self) -> list[Violation]:
        return [v for v in self.violations if v.severity == "warning"]

    @property
    def ok(self) -> bool:
        return not self.fatal

    def describe(self) -> str:
        return "\n".join(f"{v.severity}: {v.describe()}" for v in self.violations)


def _classify(words: tuple[Word, ...], comments: tuple[str, ...], raw: str) -> str:
    if not words:
        if comments:
            return "comment_only"
        if raw.strip() in ("", "%"):
            return "blank" if raw.strip() == "" else "other"
        return "blank"
    for w in words:
        if w.letter == "G" and w.numeric in MOTION_G_CODES:
            return "motion"
    if any(w.letter in AXIS_LETTERS or w.letter in "IJKR" for w in words):
        return "motion"
    return "modal"


def parse_line(raw: str, number: int = 0, newline: str = "\n") -> GcodeLine:
    """Tokenize one source line (without its terminator)."""
    words: list[Word] = []
    comments: list[str] = []
    i = 0
    n = len(raw)
    while i < n:
        ch = raw[i]
        if ch in " \t":
            i += 1
        elif ch == "(":
            close = raw.find(")", i + 1)
            if close == -1:
                raise GcodeParseError("unterminated comment", number, i + 1)
            body = raw[i + 1 : close]
            if "(" in body:
                raise GcodeParseError("nested comment", number, i + 1)
            comments.append(body)
            i = close + 1
        elif ch == ";":
            comments.append(raw[i + 1 :])
            i = n
        elif ch == "%" and raw.strip() == "%":
            # Program start/end marker: a bare line, kept verbatim.
            i = n
        elif ch.isalpha():
            m = _NUMBER_RE.match(raw, i + 1)
            if m is None:
                raise GcodeParseError(
                    f"letter '{ch}' with no number", number, i + 1
                )
            words.append(
                Word(
                    letter=ch.upper(),
                    text=m.group(0),
                    numeric=float(m.group(0)),
                    start=i,
                    end=m.end(),
                )
            )
            i = m.end()
        else:
            raise GcodeParseError(f"unexpected character {ch!r}", number, i + 1)
    wt, ct = tuple(words), tuple(comments)
    return GcodeLine(
        raw=raw,
        words=wt,
        comments=ct,
        kind=_classify(wt, ct, raw),
        newline=newline,
        number=number,
    )


def parse_program(text: str, source_name: str = "") -> GcodeProgram:
    """Parse full file contents; lines may be LF or CRLF terminated."""
    lines: list[GcodeLine] = []
    pos = 0
    number = 1
    while pos < len(text):
        nl = text.find("\n", pos)
        if nl == -1:
            chunk, term = text[pos:], ""
            pos = len(text)
        else:
            chunk, term = text[pos:nl], "\n"
            if chunk.endswith("\r"):
                chunk, term = chunk[:-1], "\r\n"
            pos = nl + 1
        lines.append(parse_line(chunk, number=number, newline=term))
        number += 1
    return GcodeProgram(lines=lines, source_name=source_name)


def serialize(program: GcodeProgram) -> str:
    """Byte-exact for unmodified lines; synthesized lines are LF terminated."""
    return "".join(line.raw + line.newline for line in program.lines)


def format_number(value: float, decimals: int = 4) -> str:
    """Fixed-point, trailing zeros kept: the format of every synthesized word."""
    return f"{value:.{decimals}f}"


def make_line(text: str, newline: str = "\n") -> GcodeLine:
    """Build a synthesized line by parsing its text (guarantees round-trip)."""
    return parse_line(text, number=0, newline=newline)


def _splice_out(raw: str, spans: list[tuple[int, int]]) -> str:
    """Remove word spans from raw text, consuming adjacent whitespace."""
    out = raw
    for start, end in sorted(spans, reverse=True):
        lead = start
        while lead > 0 and out[lead - 1] in " \t":
            lead -= 1
        if lead == start:
            # Word at line start: eat the whitespace that follows instead.
            while end < len(out) and out[end] in " \t":
                end += 1
        out = out[:lead] + out[end:]
    return out


def strip_axis(program: GcodeProgram, axis: str) -> GcodeProgram:
    """Remove every word with the given axis letter from motion lines.

    Lines reduced to a bare motion word (``G1`` alone, or a ``G28``/``G30``
    left with no axis words) are dropped; everything else is untouched.
    """
    if axis not in ("X", "Y", "Z"):
        raise ValueError(f"axis must be X, Y or Z, not {axis!r}")
    out: list[GcodeLine] = []
    for line in program.lines:
        if line.kind != "motion" or not line.words_with(axis):
            out.append(line)
            continue
        spans = [(w.start, w.end) for w in line.words_with(axis)]
        edited = parse_line(
            _splice_out(line.raw, spans), number=line.number, newline=line.newline
        )
        if edited.kind == "motion" and not edited.comments:
            has_axis_or_param = any(
                w.letter in AXIS_LETTERS or w.letter in "IJKRF" for w in edited.words
            )
            only_motion_words = all(
                w.letter == "G" and w.numeric in MOTION_G_CODES
                for w in edited.words
            )
            if only_motion_words and not has_axis_or_param:
                continue  # nothing left for this move
        elif not edited.words and not edited.comments:
            continue  # the axis word was the whole line
        out.append(edited)
    return GcodeProgram(lines=out, source_name=program.source_name)


def extract_metadata(
    program: GcodeProgram,
    tool_diameter_override: float | None = None,
    feedrate_override: float | None = None,
) -> ToolMetadata:
    """Recover tool diameter and feedrate from comments / F words.

    Comment patterns tried: ``D=<n>`` (Fusion tool comments), ``DIA <n>``,
    ``Ø<n>``; first match in file order wins.  Feedrate is the first
    positive F word.  Missing values fall back to the builtin defaults.
    """
    tool_diameter = tool_feed = None
    for line in program.lines:
        for comment in line.comments:
            m = _DIAMETER_RE.search(comment)
            if m and float(m.group(1)) > 0:
                tool_diameter = float(m.group(1))
                break
        if tool_diameter is not None:
            break
    for line in program.lines:
        f = line.word("F")
        if f is not None and f.numeric > 0:
            tool_feed = f.numeric
            break

    if tool_diameter_override is not None:
        diameter, dia_source = tool_diameter_override, "user"
    elif tool_diameter is not None:
        diameter, dia_source = tool_diameter, "comment"
    else:
        diameter, dia_source = DEFAULT_TOOL_DIAMETER, "fallback"

    if feedrate_override is not None:
        feed, feed_source = feedrate_override, "user"
    elif tool_feed is not None:
        feed, feed_source = tool_feed, "comment"
    else:
        feed, feed_source = DEFAULT_FEEDRATE, "fallback"

    return ToolMetadata(
        tool_diameter=diameter,
        feedrate=feed,
        tool_diameter_source=dia_source,
        feedrate_source=feed_source,
    )


def validate_planar(
    program: GcodeProgram, allow_rotary_index: bool = False
) -> ValidationReport:
    """Check that a program is a planar XZ toolpath this pipeline can handle.

    Fatal: arc motion, rotary-axis (Y) words, and linear motion executed in
    incremental mode (a replicated G91 toolpath walks away from the part).
    With ``allow_rotary_index`` set, Y words are tolerated on pure G0 index
    moves, the shape of converter output.
    """
    report = ValidationReport()
    add = report.violations.append
    saw_g21 = saw_g20 = saw_g90 = False
    incremental = False
    for line in program.lines:
        if line.kind not in ("motion", "modal"):
            continue
        saw_g21 = saw_g21 or line.has_g(21)
        saw_g20 = saw_g20 or line.has_g(20)
        saw_g90 = saw_g90 or line.has_g(90)
        if line.has_g(90):
            incremental = False
        elif line.has_g(91):
            incremental = True
        for w in line.words:
            if w.letter != "G":
                continue
            if w.numeric in (2, 3):
                add(Violation("fatal", "arc-motion", "arc motion unsupported", line.number))
            elif w.numeric in CANNED_CYCLE_G_CODES:
                add(Violation("warning", "canned-cycle", f"canned cycle G{w.numeric:g} unsupported", line.number))
            elif w.numeric in COMPENSATION_G_CODES:
                add(Violation("warning", "compensation", f"G{w.numeric:g} compensation ignored by this pipeline", line.number))
        if line.kind == "motion":
            y_words = line.words_with("Y")
            if y_words:
                is_pure_index = (
                    line.has_g(0)
                    and not line.has_g(1, 2, 3, 28, 30)
                )
                if not (allow_rotary_index and is_pure_index):
                    add(Violation("fatal", "rotary-axis-word", "Y word on a planar toolpath line", line.number))
            moves_axes = any(w.letter in AXIS_LETTERS for w in line.words)
            if (
                incremental
                and moves_axes
                and not line.has_g(28, 30, 53)
            ):
                add(Violation(
                    "fatal", "incremental-motion",
                    "motion in incremental mode (G91) cannot be replicated",
                    line.number,
                ))
        if line.has_m(0, 1):
            add(Violation("warning", "pause", "program pause will repeat in every indexed pass", line.number))
        if line.has_m(6):
            add(Violation("warning", "tool-change", "M6 tool change is not supported by GRBL", line.number))
    if saw_g20:
        add(Violation("warning", "inch-units", "program uses inch units (G20); parameters are taken in file units"))
    elif not saw_g21:
        add(Violation("warning", "missing-units", "no G21 found; units assumed metric"))
    if not saw_g90:
        add(Violation("warning", "missing-positioning", "no G90 found; positioning mode assumed absolute"))
    return report
