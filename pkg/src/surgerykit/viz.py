"""Static meshes for the rotation pictures of S^3.

A ``ProfileScene`` is a labelled planar drawing of S^2 minus a point (one
instance of 2-dimensional 0-surgery).  Revolving it about a line or about
the circle ``ell`` produces the pieces of a decomposition of S^3 minus a
point, emitted as triangle meshes.  The point at infinity is handled by
clipping at a scene radius ``clip``; pieces that reach infinity are closed
off by the clip sphere and carry the label prefix ``decompactified``.

Coordinates: the scene lives in the plane z = 0.  ``ell_prime`` is the
x-axis.  In the first projection ``ell`` is the y-axis; in the second it is
the circle of radius 3 about the origin.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "RevolutionError",
    "ProfileCurve",
    "ProfileScene",
    "Mesh",
    "build_profile",
    "revolve_about_line",
    "revolve_about_circle",
    "scene_meshes",
    "export_obj",
    "obj_text",
    "read_obj",
    "DEFAULT_CLIP",
]

DEFAULT_CLIP = 10.0

LABELS = frozenset(
    {
        "disc_L",
        "disc_R",
        "disc_inner",
        "disc_outer",
        "cylinder_L",
        "cylinder_R",
        "cylinder_inner",
        "cylinder_outer",
        "ell",
        "ell_prime",
        "critical_point",
    }
)

PROJECTIONS = ("first", "second")
INSTANCES = ("initial", "critical", "final")


class RevolutionError(ValueError):
    pass


@dataclass(frozen=True)
class ProfileCurve:
    """One labelled curve of a scene.

    ``kind`` is ``circle`` (``center``, ``radius``), ``line`` (through
    ``center`` with unit ``direction``) or ``point``.  ``role`` is
    ``boundary`` for curves bounding a piece, ``guide`` for the axes and
    ``marker`` for the critical point.  ``outside`` marks a circle whose
    piece is the unbounded side.
    """

    label: str
    kind: str
    center: tuple[float, float] = (0.0, 0.0)
    radius: float = 0.0
    direction: tuple[float, float] = (1.0, 0.0)
    role: str = "boundary"
    outside: bool = False
    note: str = ""


@dataclass(frozen=True)
class ProfileScene:
    projection: str
    instance: str
    curves: tuple[ProfileCurve, ...]
    clip: float = DEFAULT_CLIP

    def __post_init__(self):
        if self.projection not in PROJECTIONS:
            raise ValueError(f"projection must be one of {PROJECTIONS}")
        if self.instance not in INSTANCES:
            raise ValueError(f"instance must be one of {INSTANCES}")
        for c in self.curves:
            if c.label not in LABELS:
                raise ValueError(f"unknown curve label {c.label!r}")
        extent = max((_extent(c) for c in self.curves), default=0.0)
        if not self.clip > extent:
            raise ValueError(f"clip radius {self.clip} must exceed the scene extent {extent}")

    def curve(self, label: str) -> ProfileCurve:
        for c in self.curves:
            if c.label == label:
                return c
        raise KeyError(label)

    @property
    def boundaries(self) -> list[ProfileCurve]:
        return [c for c in self.curves if c.role == "boundary"]


def _extent(c: ProfileCurve) -> float:
    if c.kind == "line":
        return abs(c.center[0]) + abs(c.center[1])
    return math.hypot(*c.center) + c.radius


def build_profile(projection: str, instance: str, clip: float = DEFAULT_CLIP) -> ProfileScene:
    """Planar scene for one instance of 2-dimensional 0-surgery.

    First projection: the discs have radius 1 and centers (-2, 0) and
    (2, 0); the final cylinder is the strip |x| <= 1.  Second projection:
    the inner disc has radius 1, the outer disc is |p| >= 9 together with
    infinity, and ``ell`` is the circle of radius 3 (so the two disc
    boundaries are exchanged by inversion in ``ell``).
    """
    if projection not in PROJECTIONS:
        raise ValueError(f"projection must be one of {PROJECTIONS}")
    if instance not in INSTANCES:
        raise ValueError(f"instance must be one of {INSTANCES}")
    ell_prime = ProfileCurve("ell_prime", "line", (0.0, 0.0), direction=(1.0, 0.0), role="guide")
    if projection == "first":
        guides = [
            ProfileCurve("ell", "line", (0.0, 0.0), direction=(0.0, 1.0), role="guide"),
            ell_prime,
        ]
        if instance == "initial":
            body = [
                ProfileCurve("disc_L", "circle", (-2.0, 0.0), 1.0),
                ProfileCurve("disc_R", "circle", (2.0, 0.0), 1.0),
            ]
        elif instance == "final":
            body = [
                ProfileCurve("cylinder_L", "line", (-1.0, 0.0), direction=(0.0, 1.0)),
                ProfileCurve("cylinder_R", "line", (1.0, 0.0), direction=(0.0, 1.0)),
            ]
        else:
            body = [_critical()]
    else:
        guides = [ProfileCurve("ell", "circle", (0.0, 0.0), 3.0, role="guide"), ell_prime]
        if instance == "initial":
            body = [
                ProfileCurve("disc_inner", "circle", (0.0, 0.0), 1.0),
                ProfileCurve("disc_outer", "circle", (0.0, 0.0), 9.0, outside=True),
            ]
        elif instance == "final":
            body = [
                ProfileCurve("cylinder_inner", "circle", (0.0, 0.0), 1.0),
                ProfileCurve("cylinder_outer", "circle", (0.0, 0.0), 9.0),
            ]
        else:
            body = [_critical()]
    return ProfileScene(projection, instance, tuple(body + guides), clip)


def _critical() -> ProfileCurve:
    return ProfileCurve(
        "critical_point", "point", (0.0, 0.0), role="marker", note="one dimension higher"
    )


# --------------------------------------------------------------------------
# meshes


@dataclass
class Mesh:
    """Indexed triangle mesh of one labelled component.

    ``surface`` names the expected topology (``sphere``, ``torus``,
    ``annulus``, ``open``) and ``closed`` whether it should be watertight.
    """

    vertices: np.ndarray
    triangles: np.ndarray
    label: str
    surface: str = ""
    closed: bool = True

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=float).reshape(-1, 3)
        self.triangles = np.asarray(self.triangles, dtype=np.int64).reshape(-1, 3)
        if len(self.triangles) and (
            self.triangles.min() < 0 or self.triangles.max() >= len(self.vertices)
        ):
            raise ValueError(f"{self.label}: triangle index out of range")

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_triangles(self) -> int:
        return len(self.triangles)

    def edges(self) -> dict[tuple[int, int], int]:
        """Undirected edge -> number of incident triangles."""
        out: dict[tuple[int, int], int] = {}
        for a, b, c in self.triangles.tolist():
            for u, v in ((a, b), (b, c), (c, a)):
                key = (u, v) if u < v else (v, u)
                out[key] = out.get(key, 0) + 1
        return out

    def euler_characteristic(self) -> int:
        used = np.unique(self.triangles) if len(self.triangles) else []
        return len(used) - len(self.edges()) + self.n_triangles

    def is_watertight(self) -> bool:
        return self.n_triangles > 0 and all(n == 2 for n in self.edges().values())

    def triangle_areas(self) -> np.ndarray:
        p = self.vertices[self.triangles]
        return 0.5 * np.linalg.norm(np.cross(p[:, 1] - p[:, 0], p[:, 2] - p[:, 0]), axis=1)

    def degenerate_triangles(self, eps: float = 1e-12) -> int:
        return int(np.count_nonzero(self.triangle_areas() <= eps))

    def validate(self) -> None:
        if self.degenerate_triangles():
            raise ValueError(f"{self.label}: degenerate triangles")
        if self.closed and not self.is_watertight():
            raise ValueError(f"{self.label}: closed component is not watertight")


def _sweep(
    profile: np.ndarray,
    loop: bool,
    frame,
    segments: int,
    sweep_deg: float,
    label: str,
    surface: str,
) -> Mesh:
    """Revolve a profile given as (r, h) points.

    ``loop`` profiles are closed curves with r > 0; otherwise the first and
    last points must sit on the axis (r = 0) and become poles.
    """
    full = sweep_deg >= 360.0
    n_ang = segments if full else segments + 1
    angles = np.linspace(0.0, math.radians(sweep_deg), n_ang, endpoint=not full)
    if not full:
        surface, closed = "open", False
    else:
        closed = True
    verts: list[np.ndarray] = []
    rings: list[list[int] | int] = []
    for i, (r, h) in enumerate(profile):
        pole = not loop and i in (0, len(profile) - 1)
        if pole:
            rings.append(len(verts))
            verts.append(frame(0.0, h, 0.0))
        else:
            start = len(verts)
            for t in angles:
                verts.append(frame(r, h, t))
            rings.append(list(range(start, start + n_ang)))
    tris = []
    steps = n_ang if full else n_ang - 1
    pairs = list(zip(rings, rings[1:]))
    if loop:
        pairs.append((rings[-1], rings[0]))
    for a, b in pairs:
        for k in range(steps):
            k1 = (k + 1) % n_ang
            if isinstance(a, int):
                tris.append((a, b[k], b[k1]))
            elif isinstance(b, int):
                tris.append((a[k], b, a[k1]))
            else:
                tris.append((a[k], b[k], b[k1]))
                tris.append((a[k], b[k1], a[k1]))
    return Mesh(np.array(verts), np.array(tris), label, surface, closed)


def _axis_frame(axis: str):
    if axis == "ell_prime":
        return lambda r, h, t: np.array([h, r * math.cos(t), r * math.sin(t)])
    return lambda r, h, t: np.array([r * math.cos(t), h, r * math.sin(t)])


def _axis_coords(axis: str, x: float, y: float) -> tuple[float, float]:
    """(axial position, signed distance) of a scene point."""
    return (x, y) if axis == "ell_prime" else (y, x)


def _arc(cr: float, ch: float, rad: float, t0: float, t1: float, n: int) -> np.ndarray:
    t = np.linspace(t0, t1, n)
    return np.stack([cr + rad * np.cos(t), ch + rad * np.sin(t)], axis=1)


def _clean(profile: np.ndarray) -> np.ndarray:
    profile = np.asarray(profile, dtype=float)
    keep = [0]
    for i in range(1, len(profile)):
        if np.linalg.norm(profile[i] - profile[keep[-1]]) > 1e-9:
            keep.append(i)
    return profile[keep]


def revolve_about_line(
    scene: ProfileScene, axis: str, sweep: float = 180.0, segments: int = 32
) -> list[Mesh]:
    """Surfaces of revolution of the scene's boundary curves.

    ``axis`` is ``ell`` or ``ell_prime``.  A curve meeting the axis on both
    of its sides contributes both halves of its surface, so a 180 degree
    sweep closes it up; two curves that are mirror images across the axis
    do the same.  Whenever the halves cover the full turn the closed 360
    degree surface is emitted; otherwise an open partial surface.

    Circles centered on the axis give spheres and circles off the axis give
    tori.  A circle crossing the axis raises ``RevolutionError``.  Lines
    reach infinity: the region beyond each line is cut off by the clip
    sphere and its closed boundary is emitted as a ``decompactified``
    piece.
    """
    if axis not in ("ell", "ell_prime"):
        raise ValueError("axis must be 'ell' or 'ell_prime'")
    if not 0.0 < sweep <= 360.0:
        raise ValueError("sweep must lie in (0, 360] degrees")
    if segments < 8:
        raise ValueError("segments must be at least 8")
    if axis == "ell" and scene.projection == "second":
        raise RevolutionError("in the second projection ell is a circle; use revolve_about_circle")
    R = scene.clip
    frame = _axis_frame(axis)
    # key -> [profile, loop, halves, labels, surface, name]
    pieces: dict[tuple, list] = {}
    order: list[tuple] = []

    def add(key, profile, loop, halves, label, surface, name):
        if key in pieces:
            pieces[key][2] += halves
            pieces[key][3].append(label)
        else:
            pieces[key] = [profile, loop, halves, [label], surface, name]
            order.append(key)

    extra: list[Mesh] = []
    for c in scene.boundaries:
        if c.kind == "circle":
            a, d = _axis_coords(axis, *c.center)
            d = abs(d)
            rho = c.radius
            if d == 0.0:
                prof = _arc(0.0, a, rho, -math.pi / 2, math.pi / 2, segments // 2 + 1)
                prof[:, 0] = np.abs(prof[:, 0])
                prof[0, 0] = prof[-1, 0] = 0.0
                name = c.label.replace("disc_", "ball_").replace("cylinder_", "thickened_sphere_")
                add(("sphere", a, rho, c.label), prof, False, 2, c.label, "sphere", name)
                if c.outside:
                    extra.append(_clip_sphere(R, segments))
            elif d > rho:
                prof = _arc(d, a, rho, 0.0, 2 * math.pi, segments + 1)[:-1]
                add(("torus", a, d, rho), prof, True, 1, c.label, "torus", "solid_torus")
            else:
                raise RevolutionError(f"axis {axis} crosses the interior of {c.label}")
        elif c.kind == "line":
            a, d = _axis_coords(axis, *c.center)
            da, dd = _axis_coords(axis, *c.direction)
            if abs(dd) < 1e-12:  # parallel to the axis
                d = abs(d)
                if d == 0.0:
                    raise RevolutionError(f"{c.label} lies on the axis {axis}")
                H = math.sqrt(R * R - d * d)
                phi = math.atan2(H, d)
                seg = np.stack([np.full(segments // 2, d), np.linspace(-H, H, segments // 2)], axis=1)
                arc = _arc(0.0, 0.0, R, phi, -phi, segments // 2 + 1)[1:-1]
                prof = np.concatenate([seg, arc])
                add(("wall", d), prof, True, 1, c.label, "torus", "decompactified_solid_torus")
            elif abs(da) < 1e-12:  # perpendicular
                if a == 0.0:
                    raise RevolutionError(f"{c.label} passes through the center of {axis}")
                s = 1.0 if a > 0 else -1.0
                w = math.sqrt(R * R - a * a)
                seg = np.stack([np.linspace(0.0, w, segments // 2), np.full(segments // 2, a)], axis=1)
                t0 = math.atan2(a, w)
                arc = _arc(0.0, 0.0, R, t0, s * math.pi / 2, segments // 2 + 1)[1:]
                prof = np.concatenate([seg, arc])
                prof[-1, 0] = 0.0
                add(("plane", a), prof, False, 2, c.label, "sphere", "decompactified_" + c.label)
            else:
                raise RevolutionError(f"{c.label} is oblique to the axis {axis}")
    out = []
    tori = sum(1 for k in order if pieces[k][4] == "torus" and pieces[k][5] == "solid_torus")
    n_torus = 0
    for key in order:
        prof, loop, halves, labels, surface, name = pieces[key]
        if name == "solid_torus" and tori > 1:
            n_torus += 1
            name = f"solid_torus_{n_torus}"
        cover = min(360.0, sweep * halves)
        out.append(_sweep(_clean(prof), loop, frame, segments, cover, name, surface))
    return out + extra


def _clip_sphere(R: float, segments: int) -> Mesh:
    prof = _arc(0.0, 0.0, R, -math.pi / 2, math.pi / 2, segments // 2 + 1)
    prof[0, 0] = prof[-1, 0] = 0.0
    prof[:, 0] = np.abs(prof[:, 0])
    return _sweep(prof, False, _axis_frame("ell"), segments, 360.0, "decompactified", "sphere")


def revolve_about_circle(
    scene: ProfileScene, circle_radius: float | None = None, segments: int = 32, rings: int = 4
) -> list[Mesh]:
    """Rotate a second-projection scene about the circle ``ell``.

    Each point moves on the circle through it and its inverse in ``ell``,
    orthogonal to the plane.  The middle annulus therefore sweeps the solid
    torus whose boundary is the torus through both annulus boundary
    circles.  The inner and outer discs sweep the complement solid torus:
    each meridian half-plane gives one annular ring, and the outer boundary
    of the clipped complement is the ``decompactified`` clip sphere.
    ``rings`` meridian rings are emitted as open meshes.
    """
    if scene.projection != "second":
        raise RevolutionError("revolution about the circle ell needs the second projection")
    if segments < 8:
        raise ValueError("segments must be at least 8")
    c = circle_radius if circle_radius is not None else scene.curve("ell").radius
    if scene.instance == "critical":
        return []
    inner, outer = [cv for cv in scene.boundaries if cv.kind == "circle"]
    a, b = sorted((inner.radius, outer.radius))
    if not math.isclose(a * b, c * c):
        raise RevolutionError(
            f"{inner.label} and {outer.label} are not exchanged by inversion in ell (radius {c})"
        )
    R = scene.clip
    center, tube = (a + b) / 2, (b - a) / 2
    prof = _arc(center, 0.0, tube, 0.0, 2 * math.pi, segments + 1)[:-1]
    frame = _axis_frame("ell")
    # the torus axis is perpendicular to the scene plane: swap y and z
    swap = lambda r, h, t: frame(r, h, t)[[0, 2, 1]]
    out = [_sweep(prof, True, swap, segments, 360.0, "solid_torus_D2xS1", "torus")]
    out.append(_clip_sphere(R, segments))
    for k in range(rings):
        out.append(_ring(center, tube, R, 2 * math.pi * k / rings, segments, f"annular_ring_{k}"))
    return out


def _ring(center: float, tube: float, R: float, theta: float, n: int, label: str) -> Mesh:
    """Clipped meridian half-plane minus the torus's cross-section disc."""
    inner, outer = [], []
    for k in range(n):
        phi = 2 * math.pi * k / n
        ux, uz = math.cos(phi), math.sin(phi)
        inner.append((center + tube * ux, tube * uz))
        # ray from (center, 0) to the half-disc {x >= 0, x^2 + z^2 <= R^2}
        bq = center * ux
        t = -bq + math.sqrt(bq * bq - (center * center - R * R))
        if ux < 0:
            t = min(t, -center / ux)
        outer.append((center + t * ux, t * uz))
    pts = inner + outer
    ct, st = math.cos(theta), math.sin(theta)
    verts = np.array([[x * ct, x * st, z] for x, z in pts])
    tris = []
    for k in range(n):
        k1 = (k + 1) % n
        tris.append((k, n + k, n + k1))
        tris.append((k, n + k1, k1))
    return Mesh(verts, np.array(tris), label, "annulus", closed=False)


def scene_meshes(
    projection: str,
    surgery: int,
    instance: str,
    segments: int = 32,
    clip: float = DEFAULT_CLIP,
    sweep: float = 180.0,
    axis: str | None = None,
) -> list[Mesh]:
    """Meshes for one picture: 0-surgery rotates about ``ell_prime``,
    1-surgery about ``ell`` (a line in the first projection, a circle in
    the second)."""
    if surgery not in (0, 1):
        raise ValueError("surgery must be 0 or 1")
    scene = build_profile(projection, instance, clip)
    if axis is None:
        axis = "ell_prime" if surgery == 0 else ("ell" if projection == "first" else "ell_circle")
    if axis == "ell_circle":
        return revolve_about_circle(scene, segments=segments)
    return revolve_about_line(scene, axis, sweep, segments)


# --------------------------------------------------------------------------
# OBJ


def _fmt(v: float) -> str:
    return f"{round(float(v), 6) + 0.0:.6f}"


def obj_text(meshes: Sequence[Mesh], markers: Sequence[ProfileCurve] = ()) -> str:
    """OBJ text; ``markers`` (point curves) become comment lines."""
    lines = ["# surgerykit mesh export", f"# components: {len(meshes)}"]
    for mk in markers:
        x, y = mk.center
        lines.append(f"# marker {mk.label} {_fmt(x)} {_fmt(y)} {_fmt(0.0)} {mk.note}".rstrip())
    offset = 1
    for m in meshes:
        lines.append(f"o {m.label}")
        for x, y, z in m.vertices.tolist():
            lines.append(f"v {_fmt(x)} {_fmt(y)} {_fmt(z)}")
        for a, b, c in (m.triangles + offset).tolist():
            lines.append(f"f {a} {b} {c}")
        offset += m.n_vertices
    return "\n".join(lines) + "\n"


def export_obj(
    meshes: Iterable[Mesh], path: str | os.PathLike, markers: Sequence[ProfileCurve] = ()
) -> None:
    meshes = list(meshes)
    for m in meshes:
        m.validate()
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(obj_text(meshes, markers))


def read_obj(source: str | os.PathLike) -> list[Mesh]:
    """Parse OBJ text written by ``export_obj`` (a path or the text)."""
    text = str(source)
    if "\n" not in text and os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    meshes: list[Mesh] = []
    label, verts, faces, base = None, [], [], 1
    all_v = 0

    def flush():
        if label is not None:
            tri = np.array(faces, dtype=np.int64).reshape(-1, 3) - base
            meshes.append(Mesh(np.array(verts).reshape(-1, 3), tri, label))

    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        tag = parts[0]
        if tag == "o":
            flush()
            label, verts, faces, base = " ".join(parts[1:]), [], [], all_v + 1
        elif tag == "v":
            verts.append([float(t) for t in parts[1:4]])
            all_v += 1
        elif tag == "f":
            faces.append([int(t.split("/")[0]) for t in parts[1:4]])
        else:
            raise ValueError(f"line {lineno}: unsupported OBJ record {tag!r}")
    flush()
    return meshes
