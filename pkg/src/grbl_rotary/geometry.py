"""Validation geometry for indexed rotary programs.

Reconstructs the 2D XZ toolpath polyline from a sanitized program,
revolves its cutting moves into a faceted surface sampled at the plan's
angular stations, and measures how far that surface sags below the
nominal circle by brute-force sampling.  The sampling routine is kept
dumb on purpose: it is the independent check for the closed-form facet
error, so it must not share that derivation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .gcode import GcodeProgram

MIN_STATIONS = 3

#: Moves through stored/machine positions; not part of the workpiece profile.
_NON_PROFILE_G = (28, 30, 53)

MESH_FORMATS = ("wavefront-obj", "mesh-json")


@dataclass(frozen=True)
class ToolpathPolyline:
    """Planar toolpath as a point chain with one move kind per segment."""

    points: tuple[tuple[float, float], ...]
    kinds: tuple[str, ...]

    def __post_init__(self):
        if self.points:
            if len(self.points) != len(self.kinds) + 1:
                raise ValueError("point count must be segment count + 1")
        elif self.kinds:
            raise ValueError("kinds given for an empty polyline")
        for k in self.kinds:
            if k not in ("rapid", "feed"):
                raise ValueError(f"unknown segment kind {k!r}")

    @property
    def bounds(self) -> tuple[float, float, float, float]:
        """(x_min, x_max, z_min, z_max); all zero when empty."""
        if not self.points:
            return (0.0, 0.0, 0.0, 0.0)
        xs = [p[0] for p in self.points]
        zs = [p[1] for p in self.points]
        return (min(xs), max(xs), min(zs), max(zs))

    def segments(self) -> list[tuple[str, tuple[float, float], tuple[float, float]]]:
        return [
            (kind, self.points[i], self.points[i + 1])
            for i, kind in enumerate(self.kinds)
        ]


@dataclass
class RevolvedMesh:
    """Triangle mesh of the toolpath revolved at N discrete stations."""

    vertices: np.ndarray  # (V, 3) float
    faces: np.ndarray  # (F, 3) int, 0-based
    stations: int
    profile_points: int

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=float).reshape(-1, 3)
        self.faces = np.asarray(self.faces, dtype=int).reshape(-1, 3)
        if len(self.vertices) != self.stations * self.profile_points:
            raise ValueError("vertex count must equal stations * profile_points")
        if len(self.faces) and self.faces.max() >= len(self.vertices):
            raise ValueError("face index out of range")

    @property
    def angle_per_station(self) -> float:
        return 360.0 / self.stations


def extract_polyline(program: GcodeProgram) -> ToolpathPolyline:
    """Trace the XZ positions of a sanitized planar program.

    Coordinates are modal: an axis word persists until the next word for
    that axis.  The trace starts at (0, 0); G28/G30/G53 lines move
    through machine positions unknown to us and are skipped.
    """
    points: list[tuple[float, float]] = []
    kinds: list[str] = []
    x = z = 0.0
    mode = "rapid"
    for line in program.lines:
        if line.kind != "motion":
            continue
        if any(line.has_g(g) for g in _NON_PROFILE_G):
            continue
        for w in line.words:
            if w.letter == "G":
                g = int(w.numeric)
                if g == 0:
                    mode = "rapid"
                elif g == 1:
                    mode = "feed"
                elif g in (2, 3):
                    raise ValueError(
                        f"arc motion at line {line.number}; profile must be linear"
                    )
        new_x, new_z = x, z
        x_words = line.words_with("X")
        z_words = line.words_with("Z")
        if x_words:
            new_x = x_words[-1].numeric
        if z_words:
            new_z = z_words[-1].numeric
        if (new_x, new_z) == (x, z):
            continue
        if not points:
            points.append((x, z))
        points.append((new_x, new_z))
        kinds.append(mode)
        x, z = new_x, new_z
    return ToolpathPolyline(points=tuple(points), kinds=tuple(kinds))


def _feed_chains(profile: ToolpathPolyline) -> list[list[tuple[float, float]]]:
    """Maximal runs of consecutive feed segments, as point chains."""
    chains: list[list[tuple[float, float]]] = []
    current: list[tuple[float, float]] = []
    for kind, start, end in profile.segments():
        if kind != "feed":
            if len(current) >= 2:
                chains.append(current)
            current = []
            continue
        if not current:
            current = [start]
        current.append(end)
    if len(current) >= 2:
        chains.append(current)
    return chains


def revolve(profile: ToolpathPolyline, stations: int) -> RevolvedMesh:
    """Sweep the cutting moves around the X axis at N angular stations.

    Rapids are air moves and are excluded.  Each profile point (x, z)
    lands at (x, z sin phi_j, z cos phi_j) for phi_j = j * 2pi / N, so
    station 0 lies in the XZ plane.  Chains whose ends coincide are
    welded closed.  Quads between adjacent stations are split along a
    fixed diagonal.
    """
    if stations < MIN_STATIONS:
        raise ValueError(f"need at least {MIN_STATIONS} stations, got {stations}")
    chains = _feed_chains(profile)
    if not chains:
        raise ValueError("profile has no feed moves to revolve")

    n = stations
    phi = np.arange(n) * (2.0 * math.pi / n)
    sin_phi, cos_phi = np.sin(phi), np.cos(phi)
    vertex_blocks: list[np.ndarray] = []
    face_blocks: list[np.ndarray] = []
    base = 0
    total_points = 0
    for chain in chains:
        closed = chain[0] == chain[-1] and len(chain) > 2
        pts = np.asarray(chain[:-1] if closed else chain, dtype=float)
        m = len(pts)
        total_points += m
        cx, cz = pts[:, 0], pts[:, 1]
        # verts[j*m + k] = profile point k at station j
        verts = np.empty((n, m, 3))
        verts[:, :, 0] = cx[None, :]
        verts[:, :, 1] = cz[None, :] * sin_phi[:, None]
        verts[:, :, 2] = cz[None, :] * cos_phi[:, None]
        vertex_blocks.append(verts.reshape(-1, 3))

        seg_count = m if closed else m - 1
        j = np.repeat(np.arange(n), seg_count)
        k = np.tile(np.arange(seg_count), n)
        j1 = (j + 1) % n
        k1 = (k + 1) % m if closed else k + 1
        a = base + j * m + k
        b = base + j1 * m + k
        c = base + j1 * m + k1
        d = base + j * m + k1
        tri = np.empty((len(a) * 2, 3), dtype=int)
        tri[0::2] = np.column_stack([a, b, c])
        tri[1::2] = np.column_stack([a, c, d])
        face_blocks.append(tri)
        base += n * m
    return RevolvedMesh(
        vertices=np.vstack(vertex_blocks),
        faces=np.vstack(face_blocks),
        stations=n,
        profile_points=total_points,
    )


def max_radial_deviation(
    mesh: RevolvedMesh, nominal_radius: float, samples_per_edge: int = 100
) -> float:
    """Worst |nominal_radius - distance to the X axis| over all facets.

    Every triangle is blanketed with a dense barycentric grid (the grid
    resolution is samples_per_edge along each edge) and each sample's
    radial distance is measured directly.  No closed-form shortcuts:
    this is the measurement the analytic facet error is checked against.
    """
    if nominal_radius <= 0:
        raise ValueError("nominal radius must be positive")
    if samples_per_edge < 1:
        raise ValueError("need at least one sample per edge")
    b = samples_per_edge
    i, j = np.meshgrid(np.arange(b + 1), np.arange(b + 1), indexing="ij")
    keep = (i + j) <= b
    s = i[keep] / b
    t = j[keep] / b
    bary = np.column_stack([1.0 - s - t, s, t])  # (K, 3)

    tri_yz = mesh.vertices[mesh.faces][:, :, 1:]  # (F, 3, 2)
    worst = 0.0
    # cap the (faces x samples x 2) workspace around 40 MB
    chunk = max(1, 5_000_000 // (len(bary) * 2))
    for lo in range(0, len(tri_yz), chunk):
        pts = np.einsum("kc,fcd->fkd", bary, tri_yz[lo : lo + chunk])
        radii = np.hypot(pts[:, :, 0], pts[:, :, 1])
        dev = np.abs(nominal_radius - radii).max()
        worst = max(worst, float(dev))
    return worst


def mesh_document(mesh: RevolvedMesh) -> dict:
    """Structured mesh document shared with the web client (0-based faces)."""
    return {
        "format": "revolved-mesh",
        "stations": mesh.stations,
        "profile_points": mesh.profile_points,
        "angle_per_station_deg": mesh.angle_per_station,
        "vertices": [[round(c, 6) for c in v] for v in mesh.vertices.tolist()],
        "faces": mesh.faces.tolist(),
    }


def export_mesh(mesh: RevolvedMesh, format: str) -> bytes:
    """Serialize a mesh for preview consumers.

    "wavefront-obj" is ASCII OBJ with 1-based face indices; "mesh-json"
    is the structured document the web client reads.
    """
    if format == "wavefront-obj":
        out: list[str] = []
        for vx, vy, vz in mesh.vertices:
            out.append(f"v {vx:.6f} {vy:.6f} {vz:.6f}")
        for fa, fb, fc in mesh.faces:
            out.append(f"f {fa + 1} {fb + 1} {fc + 1}")
        return ("\n".join(out) + "\n").encode("ascii")
    if format == "mesh-json":
        return json.dumps(mesh_document(mesh)).encode("ascii")
    raise ValueError(f"unknown mesh format {format!r}")


def preview_2d(profile: ToolpathPolyline) -> dict:
    """Plot document for the XZ toolpath: segments, kinds, bounds, axes."""
    x_min, x_max, z_min, z_max = profile.bounds
    return {
        "format": "toolpath-plot",
        "axes": {"horizontal": "X", "vertical": "Z"},
        "bounds": {"x": [x_min, x_max], "z": [z_min, z_max]},
        "segments": [
            {"kind": kind, "start": [sx, sz], "end": [ex, ez]}
            for kind, (sx, sz), (ex, ez) in profile.segments()
        ],
    }
