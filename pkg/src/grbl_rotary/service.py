"""Stateless HTTP API for the rotary post-processor.

One conversion endpoint plus a health check.  Uploads are processed in
memory and nothing survives the request; the returned G-code is the
same bytes the command-line tool would write for identical parameters.

Error contract: 400 for bad parameters or file types (field-level
messages), 413 for oversize uploads, 422 when the G-code itself fails
validation (the report rides along).
"""

from __future__ import annotations

from dataclasses import dataclass

from fastapi import FastAPI, File, Form, UploadFile
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from . import __version__
from .gcode import GcodeParseError, extract_metadata, parse_program, serialize
from .geometry import extract_polyline, mesh_document, preview_2d, revolve
from .indexing import DEFAULT_OVERLAP, IndexingParams, make_plan
from .transform import ConversionError, MachineProfile, convert, sanitize_toolpath

DEFAULT_MAX_FILE_BYTES = 5 * 1024 * 1024
ALLOWED_EXTENSIONS = (".gcode", ".nc", ".txt")

_READ_CHUNK = 1024 * 1024


@dataclass(frozen=True)
class ServiceConfig:
    max_file_bytes: int = DEFAULT_MAX_FILE_BYTES
    version: str = __version__


def _field_error_response(fields: dict[str, str]) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error": "invalid parameters", "fields": fields},
    )


def _report_payload(report) -> list[dict]:
    return [
        {
            "severity": v.severity,
            "code": v.code,
            "message": v.message,
            "line": v.line,
        }
        for v in report.violations
    ]


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    cfg = config or ServiceConfig()
    app = FastAPI(title="rotary post-processor", version=cfg.version)

    @app.exception_handler(RequestValidationError)
    async def _request_errors(request, exc):
        # FastAPI's default status for malformed fields is 422; this API
        # reserves 422 for G-code validation failures, so remap to 400.
        fields: dict[str, str] = {}
        for err in exc.errors():
            loc = [str(part) for part in err.get("loc", ()) if part != "body"]
            fields[".".join(loc) or "request"] = err.get("msg", "invalid value")
        return _field_error_response(fields)

    @app.get("/api/health")
    async def health() -> dict:
        return {
            "status": "ok",
            "version": cfg.version,
            "max_file_bytes": cfg.max_file_bytes,
        }

    @app.post("/api/convert")
    async def convert_endpoint(
        file: UploadFile = File(...),
        stock_radius: float = Form(...),
        passes: int | None = Form(None),
        steps_per_rev: int | None = Form(None),
        overlap: float | None = Form(None),
        tolerance: float | None = Form(None),
        feed_override: float | None = Form(None),
        diameter_basis: str | None = Form(None),
    ):
        fields: dict[str, str] = {}
        if stock_radius <= 0:
            fields["stock_radius"] = "stock radius must be positive"
        if passes is not None and steps_per_rev is not None:
            fields["steps_per_rev"] = "give passes or steps_per_rev, not both"
        explicit = passes if passes is not None else steps_per_rev
        if explicit is not None and explicit < 1:
            fields["passes" if passes is not None else "steps_per_rev"] = (
                "at least 1 indexed pass is required"
            )
        if explicit is not None and tolerance is not None:
            fields["tolerance"] = "give a pass count or a tolerance, not both"
        if overlap is not None and (explicit is not None or tolerance is not None):
            fields["overlap"] = "overlap cannot be combined with a pass count or tolerance"
        if overlap is not None and not 0 < overlap <= 1:
            fields["overlap"] = "overlap must be in (0, 1]"
        if tolerance is not None and tolerance <= 0:
            fields["tolerance"] = "tolerance must be positive"
        if feed_override is not None and feed_override <= 0:
            fields["feed_override"] = "feed override must be positive"
        basis = diameter_basis or "toolpath"
        if basis not in ("stock", "toolpath"):
            fields["diameter_basis"] = "diameter basis must be 'stock' or 'toolpath'"
        filename = file.filename or ""
        extension = "." + filename.rsplit(".", 1)[-1].lower() if "." in filename else ""
        if extension not in ALLOWED_EXTENSIONS:
            fields["file"] = (
                f"unsupported file type {extension or '(none)'}; "
                f"expected one of {', '.join(ALLOWED_EXTENSIONS)}"
            )
        if fields:
            return _field_error_response(fields)

        size = 0
        chunks: list[bytes] = []
        while True:
            chunk = await file.read(_READ_CHUNK)
            if not chunk:
                break
            size += len(chunk)
            if size > cfg.max_file_bytes:
                return JSONResponse(
                    status_code=413,
                    content={
                        "error": "file too large",
                        "max_file_bytes": cfg.max_file_bytes,
                    },
                )
            chunks.append(chunk)
        data = b"".join(chunks)
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError:
            text = data.decode("latin-1")

        try:
            program = parse_program(text, source_name=filename)
        except GcodeParseError as exc:
            return JSONResponse(
                status_code=422,
                content={
                    "error": f"G-code parse failure: {exc}",
                    "report": [
                        {
                            "severity": "fatal",
                            "code": "parse-error",
                            "message": str(exc),
                            "line": exc.line,
                        }
                    ],
                },
            )

        metadata = extract_metadata(program)
        try:
            params = IndexingParams(
                stock_diameter=2.0 * stock_radius,
                tool_diameter=metadata.tool_diameter,
                overlap=overlap if overlap is not None else DEFAULT_OVERLAP,
                error_tolerance=tolerance,
                explicit_passes=explicit,
                diameter_basis=basis,
            )
            plan = make_plan(params)
        except ValueError as exc:
            return _field_error_response({"stock_radius": str(exc)})

        profile = MachineProfile(feed_override=feed_override)
        try:
            result = convert(program, plan, profile, metadata)
        except ConversionError as exc:
            return JSONResponse(
                status_code=422,
                content={
                    "error": str(exc),
                    "report": _report_payload(exc.report) if exc.report else [],
                },
            )

        warnings = list(result.warnings)
        sanitized, _ = sanitize_toolpath(program)
        polyline = extract_polyline(sanitized)
        try:
            mesh = mesh_document(revolve(polyline, plan.num_passes))
        except ValueError as exc:
            mesh = None
            warnings.append(f"3D preview unavailable: {exc}")

        return {
            "plan": {
                "num_passes": plan.num_passes,
                "angle_per_pass": plan.angle_per_pass,
                "pass_width": plan.pass_width,
                "basis_diameter": plan.basis_diameter,
                "predicted_sagitta": plan.predicted_sagitta,
                "source": plan.source,
                "summary": plan.describe(),
            },
            "metadata": {
                "tool_diameter": metadata.tool_diameter,
                "tool_diameter_source": metadata.tool_diameter_source,
                "feedrate": metadata.feedrate,
                "feedrate_source": metadata.feedrate_source,
            },
            "warnings": warnings,
            "preview_2d": preview_2d(polyline),
            "mesh": mesh,
            "gcode": serialize(result.program),
            "stats": result.stats,
        }

    return app


app = create_app()
