"""Pass-count planning for indexed rotary machining.

Given stock and tool geometry this module decides how many angular
stations a revolution is split into, what the per-pass rotation is, and
how large the resulting flat-facet deviation will be.  No G-code in
here, just the arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_OVERLAP = 0.8

#: Fewer stations than this degenerates into carving flats, not a round.
MIN_PASSES = 3

PLAN_SOURCES = ("overlap", "tolerance", "explicit")
DIAMETER_BASES = ("stock", "toolpath")


@dataclass(frozen=True)
class IndexingParams:
    """Inputs to the pass planner.

    ``overlap`` is the fraction of the tool diameter that advances the
    cut per pass (1.0 = passes exactly abut, smaller = more overlap).
    ``diameter_basis`` picks the circumference the pass width is spread
    over: the raw stock surface or the finished toolpath surface one
    tool diameter deeper (stock minus twice the tool radius).
    """

    stock_diameter: float
    tool_diameter: float
    overlap: float = DEFAULT_OVERLAP
    error_tolerance: float | None = None
    explicit_passes: int | None = None
    diameter_basis: str = "toolpath"

    def __post_init__(self):
        if self.stock_diameter <= 0:
            raise ValueError("stock diameter must be positive")
        if self.tool_diameter <= 0:
            raise ValueError("tool diameter must be positive")
        if not 0 < self.overlap <= 1:
            raise ValueError("overlap must be in (0, 1]")
        if self.diameter_basis not in DIAMETER_BASES:
            raise ValueError(f"diameter basis must be one of {DIAMETER_BASES}")
        if self.error_tolerance is not None and self.explicit_passes is not None:
            raise ValueError("give either an error tolerance or a pass count, not both")
        if self.error_tolerance is not None and self.error_tolerance <= 0:
            raise ValueError("error tolerance must be positive")
        if self.explicit_passes is not None and self.explicit_passes < 1:
            raise ValueError("pass count must be at least 1")
        if self.diameter_basis == "toolpath" and self.toolpath_diameter <= 0:
            raise ValueError("Tool diameter is too large for stock diameter")

    @property
    def stock_radius(self) -> float:
        return self.stock_diameter / 2.0

    @property
    def toolpath_diameter(self) -> float:
        return self.stock_diameter - 2.0 * self.tool_diameter

    @property
    def basis_diameter(self) -> float:
        if self.diameter_basis == "stock":
            return self.stock_diameter
        return self.toolpath_diameter


@dataclass(frozen=True)
class IndexingPlan:
    """The planner's answer: how the revolution is carved up."""

    num_passes: int
    angle_per_pass: float  # degrees
    pass_width: float  # mm of circumference advanced per pass
    basis_diameter: float
    predicted_sagitta: float  # mm, at the stock surface
    source: str  # which rule fixed num_passes

    def describe(self) -> str:
        return f"passes: {self.num_passes}, angle: {self.angle_per_pass:.2f}°"


def pass_width(tool_diameter: float, overlap: float = DEFAULT_OVERLAP) -> float:
    """Effective circumferential advance per pass: overlap * tool diameter."""
    if tool_diameter <= 0:
        raise ValueError("tool diameter must be positive")
    if not 0 < overlap <= 1:
        raise ValueError("overlap must be in (0, 1]")
    return overlap * tool_diameter


def passes_from_overlap(params: IndexingParams) -> int:
    """Passes needed to cover the basis circumference with overlapping cuts."""
    if params.basis_diameter <= 0:
        raise ValueError("Tool diameter is too large for stock diameter")
    width = pass_width(params.tool_diameter, params.overlap)
    return max(1, math.ceil(math.pi * params.basis_diameter / width))


def angle_per_pass(num_passes: int) -> float:
    """Even angular division of the full circle, in degrees."""
    if num_passes < 1:
        raise ValueError("pass count must be positive")
    return 360.0 / num_passes


def faceting_error_full_angle(radius: float, angle_deg: float) -> float:
    """Radial drop of a flat facet spanning the full angle: R(1 - cos(angle)).

    The conventional upper bound quoted for an N-station polygonal
    approximation; see :func:`sagitta_error` for the chord-midpoint value.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    return radius * (1.0 - math.cos(math.radians(angle_deg)))


def sagitta_error(radius: float, num_passes: int) -> float:
    """Exact mid-chord deviation of an N-gon from its circumscribed circle.

    The maximum distance between the arc and the chord occurs at the
    chord midpoint and equals R(1 - cos(pi/N)).
    """
    if num_passes < MIN_PASSES:
        raise ValueError(f"pass count must be at least {MIN_PASSES}")
    return _chord_deviation(radius, num_passes)


def _chord_deviation(radius: float, num_passes: int) -> float:
    if radius <= 0:
        raise ValueError("radius must be positive")
    return radius * (1.0 - math.cos(math.pi / num_passes))


def sagitta_error_approx(radius: float, num_passes: int) -> float:
    """Small-angle form of :func:`sagitta_error`: R pi^2 / (2 N^2)."""
    if num_passes < MIN_PASSES:
        raise ValueError(f"pass count must be at least {MIN_PASSES}")
    if radius <= 0:
        raise ValueError("radius must be positive")
    return radius * math.pi**2 / (2.0 * num_passes**2)


def passes_from_tolerance(radius: float, error_tolerance: float) -> int:
    """Smallest pass count keeping the facet deviation under the tolerance.

    Inverts the small-angle sagitta: N = pi * sqrt(R / 2e), rounded up.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    if error_tolerance <= 0:
        raise ValueError("error tolerance must be positive")
    if error_tolerance >= radius:
        raise ValueError("error tolerance must be smaller than the stock radius")
    n = math.ceil(math.pi * math.sqrt(radius / (2.0 * error_tolerance)))
    return max(MIN_PASSES, n)


def make_plan(params: IndexingParams) -> IndexingPlan:
    """Resolve a full plan; explicit count > tolerance > overlap rule."""
    if params.explicit_passes is not None:
        n, source = params.explicit_passes, "explicit"
    elif params.error_tolerance is not None:
        n = passes_from_tolerance(params.stock_radius, params.error_tolerance)
        source = "tolerance"
    else:
        n = passes_from_overlap(params)
        source = "overlap"
    return IndexingPlan(
        num_passes=n,
        angle_per_pass=angle_per_pass(n),
        pass_width=pass_width(params.tool_diameter, params.overlap),
        basis_diameter=params.basis_diameter,
        predicted_sagitta=_chord_deviation(params.stock_radius, n),
        source=source,
    )
