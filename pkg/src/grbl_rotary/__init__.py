"""Indexed-rotary post-processing for planar XZ G-code on GRBL machines.

The Y axis of a stock 3-axis GRBL controller is repurposed to drive a
rotary fixture in discrete steps: a planar toolpath is replicated at N
angular stations, with the spindle stopped and the tool retracted for
every index move.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .gcode import (
    GcodeLine,
    GcodeParseError,
    GcodeProgram,
    ToolMetadata,
    ValidationReport,
    Word,
    extract_metadata,
    parse_program,
    serialize,
    strip_axis,
    validate_planar,
)
from .geometry import (
    RevolvedMesh,
    ToolpathPolyline,
    export_mesh,
    extract_polyline,
    max_radial_deviation,
    mesh_document,
    preview_2d,
    revolve,
)
from .indexing import (
    DEFAULT_OVERLAP,
    IndexingParams,
    IndexingPlan,
    angle_per_pass,
    faceting_error_full_angle,
    make_plan,
    pass_width,
    passes_from_overlap,
    passes_from_tolerance,
    sagitta_error,
    sagitta_error_approx,
)
from .transform import (
    ConversionError,
    ConversionResult,
    MachineProfile,
    apply_feed_policy,
    convert,
    resolve_safe_z,
    sanitize_toolpath,
)

__all__ = [
    "__version__",
    "Word",
    "GcodeLine",
    "GcodeProgram",
    "GcodeParseError",
    "ToolMetadata",
    "ValidationReport",
    "parse_program",
    "serialize",
    "strip_axis",
    "extract_metadata",
    "validate_planar",
    "DEFAULT_OVERLAP",
    "IndexingParams",
    "IndexingPlan",
    "pass_width",
    "passes_from_overlap",
    "passes_from_tolerance",
    "angle_per_pass",
    "faceting_error_full_angle",
    "sagitta_error",
    "sagitta_error_approx",
    "make_plan",
    "MachineProfile",
    "ConversionResult",
    "ConversionError",
    "convert",
    "resolve_safe_z",
    "apply_feed_policy",
    "sanitize_toolpath",
    "ToolpathPolyline",
    "RevolvedMesh",
    "extract_polyline",
    "revolve",
    "max_radial_deviation",
    "export_mesh",
    "mesh_document",
    "preview_2d",
]
