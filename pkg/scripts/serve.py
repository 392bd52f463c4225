#!/usr/bin/env python3
"""Run the conversion service under uvicorn.

Bind address, port, and the upload size limit are the only knobs on the
service itself; it keeps no state between requests.  Pass --frontend to
also serve the built web client from the same origin, so the page's
/api/convert requests land on this process.
"""

from __future__ import annotations

import argparse
from pathlib import Path

import uvicorn

from grbl_rotary.service import DEFAULT_MAX_FILE_BYTES, ServiceConfig, create_app


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument(
        "--max-file-bytes",
        type=int,
        default=DEFAULT_MAX_FILE_BYTES,
        help=f"upload size limit (default {DEFAULT_MAX_FILE_BYTES})",
    )
    parser.add_argument(
        "--frontend",
        type=Path,
        default=None,
        metavar="DIR",
        help="serve this directory (the web client) at / alongside the API",
    )
    args = parser.parse_args(argv)
    app = create_app(ServiceConfig(max_file_bytes=args.max_file_bytes))
    if args.frontend is not None:
        if not (args.frontend / "index.html").is_file():
            parser.error(f"no index.html under {args.frontend}")
        from starlette.staticfiles import StaticFiles

        # mounted after the API routes, so /api/* keeps winning
        app.mount("/", StaticFiles(directory=args.frontend, html=True))
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
