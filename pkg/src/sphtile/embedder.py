"""Unit-sphere embeddings of validated tilings, plus OBJ/JSON export.

``realize`` places the seed face with its centre at the north pole using
the circumradius, then propagates face by face: once a directed edge of a
face has both endpoints placed, the remaining vertices follow by rotating
the previous vertex about the current one through the face's interior
angle.  Every revisit of an already-placed vertex measures the closure
discrepancy, so the walk doubles as a consistency check of the angle
assignment.

Hosohedra (antipodal poles, meridian edges) are placed directly; their
edges carry explicit midpoints because antipodal endpoints do not
determine a great-circle arc.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .algsolve import AngleAssignment
from .sphkernel import TWO_PI, circumradius
from .tilemap import TilingMap, build_from_faces, digon_fan

__all__ = [
    "Embedding",
    "ClosureFailure",
    "realize",
    "face_angles",
    "face_area",
    "total_area",
    "export_obj",
    "export_json",
    "load_json",
]


class ClosureFailure(RuntimeError):
    """Propagation revisited a vertex with an inconsistent position."""


@dataclass
class Embedding:
    """Vertex positions on the unit sphere plus walk-quality metrics."""

    positions: dict
    closure_error: float
    edge_error: float = 0.0
    angle_error: float = 0.0
    # sense of the corner rotation taking the previous face vertex to the
    # next one; fixes which side of pi a measured reflex angle lies on
    corner_sign: float = 1.0
    # midpoint per edge id, only for edges with antipodal endpoints
    arc_midpoints: dict = field(default_factory=dict)


def _rotate(p: np.ndarray, axis: np.ndarray, angle: float) -> np.ndarray:
    """Rodrigues rotation of p about a unit axis."""
    c, s = math.cos(angle), math.sin(angle)
    return p * c + np.cross(axis, p) * s + axis * (np.dot(axis, p)) * (1.0 - c)


def _geodesic(u: np.ndarray, v: np.ndarray) -> float:
    return math.atan2(float(np.linalg.norm(np.cross(u, v))), float(np.dot(u, v)))


def _tangent(at: np.ndarray, toward: np.ndarray) -> np.ndarray:
    t = toward - at * float(np.dot(at, toward))
    n = np.linalg.norm(t)
    if n < 1e-14:
        raise ClosureFailure("degenerate tangent between coincident/antipodal points")
    return t / n


def _realize_hosohedron(t: TilingMap, assign: AngleAssignment) -> Embedding:
    n = t.num_faces
    alpha = assign.angle(2)
    north = np.array([0.0, 0.0, 1.0])
    south = np.array([0.0, 0.0, -1.0])
    positions = {0: north, 1: south}
    ids = t.edge_ids()
    mids = {}
    # edge i of the fan is the meridian at longitude i*alpha
    for d in range(t.num_darts):
        if d % 2 == 0:
            lon = (d // 2) * alpha
            mids[ids[d]] = np.array([math.cos(lon), math.sin(lon), 0.0])
    return Embedding(positions=positions, closure_error=0.0, arc_midpoints=mids)


def _face_centre(
    u: np.ndarray, v: np.ndarray, cosx: float, r: float, side: float
) -> np.ndarray:
    """Unit centre of the regular face through the directed edge u -> v.

    The centre is equidistant (geodesic distance r) from both endpoints;
    ``side`` (+1/-1) selects which side of the edge, consistently with the
    global orientation.
    """
    a = math.cos(r) / (1.0 + cosx)
    rem = max(1.0 - a * a * (2.0 + 2.0 * cosx), 0.0)
    beta = side * math.sqrt(rem / (1.0 - cosx * cosx))
    c = a * (u + v) + beta * np.cross(u, v)
    return c / np.linalg.norm(c)


def realize(
    t: TilingMap,
    assign: AngleAssignment,
    closure_tol: float = 1e-7,
) -> Embedding:
    """Embed a tiling on the unit sphere by geodesic propagation.

    The seed face is centred at the north pole with its vertices on the
    circumradius circle; each further face is placed rigidly from one
    shared, already-placed edge by rotating about the face centre.  Every
    revisit of a placed vertex measures the closure discrepancy, so the
    walk doubles as a verifier.  Raises ``ClosureFailure`` when revisits
    disagree beyond ``closure_tol``, which signals an inconsistent angle
    assignment.
    """
    if t.family == "hosohedron":
        return _realize_hosohedron(t, assign)

    positions: dict = {}
    worst_closure = 0.0

    def place(v: int, p: np.ndarray):
        nonlocal worst_closure
        if v in positions:
            worst_closure = max(worst_closure, float(np.linalg.norm(positions[v] - p)))
        else:
            positions[v] = p

    cosx = math.cos(assign.edge)
    radii = {m: circumradius(m, assign.angle(m)) for m in {len(c) for c in t.faces}}

    # seed face: centre at the north pole, vertices on the circumradius circle
    seed = 0
    m0 = t.face_size(seed)
    r0 = radii[m0]
    sr, cr = math.sin(r0), math.cos(r0)
    cyc0 = t.face_vertex_cycle(seed)
    for j, v in enumerate(cyc0):
        phi = TWO_PI * j / m0
        place(v, np.array([sr * math.cos(phi), sr * math.sin(phi), cr]))

    # global chirality: the seed centre must come out at the north pole
    p0, p1 = positions[cyc0[0]], positions[cyc0[1]]
    sign = 1.0
    c_probe = _face_centre(p0, p1, cosx, r0, sign)
    if c_probe[2] < 0.0:
        sign = -1.0

    done = [False] * t.num_faces
    done[seed] = True
    queue = [t.edge_pair[d] for d in t.faces[seed]]
    while queue:
        d0 = queue.pop(0)
        f = t.face_of[d0]
        if done[f]:
            continue
        done[f] = True
        mf = t.face_size(f)
        rf = radii[mf]
        ds = [d0]
        while len(ds) < mf:
            ds.append(t.face_next[ds[-1]])
        verts = [t.origin[d] for d in ds]
        u, v = positions[verts[0]], positions[verts[1]]
        centre = _face_centre(u, v, cosx, rf, sign)
        step = sign * TWO_PI / mf
        for i in range(1, mf):
            place(verts[i], _rotate(u, centre, i * step))
        for d in ds:
            nb = t.edge_pair[d]
            if not done[t.face_of[nb]]:
                queue.append(nb)

    if len(positions) != t.num_vertices:
        raise ClosureFailure("propagation did not reach every vertex")
    if worst_closure > closure_tol:
        raise ClosureFailure(
            f"closure error {worst_closure:.3e} exceeds {closure_tol:.1e}"
        )

    # corner rotations run opposite to the centre rotation sense
    emb = Embedding(
        positions=positions, closure_error=worst_closure, corner_sign=-sign
    )

    worst_edge = 0.0
    for u, v in t.edges:
        worst_edge = max(worst_edge, abs(_geodesic(positions[u], positions[v]) - assign.edge))
    emb.edge_error = worst_edge

    worst_angle = 0.0
    for f in range(t.num_faces):
        af = assign.angle(t.face_size(f))
        for ang in face_angles(t, emb, f):
            worst_angle = max(worst_angle, abs(ang - af))
    emb.angle_error = worst_angle
    return emb


def face_angles(t: TilingMap, emb: Embedding, f: int, sign: Optional[float] = None) -> list:
    """Realized interior angles of a face, reflex angles included."""
    if t.face_size(f) == 2:
        # digon: angle between the two meridian planes through the poles
        ids = t.edge_ids()
        d1, d2 = t.faces[f]
        m1, m2 = emb.arc_midpoints[ids[d1]], emb.arc_midpoints[ids[d2]]
        ang = _geodesic(m1, m2)
        return [ang, ang]
    if sign is None:
        sign = emb.corner_sign
    cyc = t.face_vertex_cycle(f)
    m = len(cyc)
    out = []
    for i in range(m):
        at = emb.positions[cyc[i]]
        t_prev = _tangent(at, emb.positions[cyc[(i - 1) % m]])
        t_next = _tangent(at, emb.positions[cyc[(i + 1) % m]])
        raw = math.atan2(
            float(np.dot(at, np.cross(t_prev, t_next))), float(np.dot(t_prev, t_next))
        )
        out.append((sign * raw) % TWO_PI)
    return out


def face_area(t: TilingMap, emb: Embedding, f: int) -> float:
    """Spherical-excess area of a face from realized coordinates."""
    m = t.face_size(f)
    return sum(face_angles(t, emb, f)) - (m - 2) * math.pi


def total_area(t: TilingMap, emb: Embedding) -> float:
    return sum(face_area(t, emb, f) for f in range(t.num_faces))


# --------------------------------------------------------------------------
# export
# --------------------------------------------------------------------------


def _slerp(u: np.ndarray, v: np.ndarray, s: float) -> np.ndarray:
    ang = _geodesic(u, v)
    if ang < 1e-14:
        return u
    return (
        math.sin((1.0 - s) * ang) * u + math.sin(s * ang) * v
    ) / math.sin(ang)


def _arc_points(u, v, mid, steps):
    """Interior sample points of the arc u->v (via mid when antipodal)."""
    pts = []
    if mid is not None:
        # split at the stored midpoint to disambiguate the great circle
        half = steps // 2 or 1
        for i in range(1, half):
            pts.append(_slerp(u, mid, i / half))
        pts.append(mid)
        for i in range(1, steps - half):
            pts.append(_slerp(mid, v, i / (steps - half)))
    else:
        for i in range(1, steps):
            pts.append(_slerp(u, v, i / steps))
    return pts


def export_obj(
    t: TilingMap,
    emb: Embedding,
    arc_steps: int = 8,
    include_faces: bool = False,
) -> bytes:
    """Wireframe OBJ: vertices plus each edge as arc_steps arc segments.

    With ``include_faces`` each face is fan-triangulated about its
    spherical centre (one midpoint refinement implicit in the fan apex).
    """
    if arc_steps < 1:
        raise ValueError("arc_steps must be >= 1")
    lines = ["# sphtile unit-sphere tiling export"]
    index: dict = {}

    def emit(p: np.ndarray) -> int:
        key = len(index) + 1
        lines.append("v %.17g %.17g %.17g" % (p[0], p[1], p[2]))
        index[key] = p
        return key

    vid = {}
    for v in sorted(emb.positions):
        vid[v] = emit(emb.positions[v])

    ids = t.edge_ids()
    edge_polylines = []
    for d in range(t.num_darts):
        if d > t.edge_pair[d]:
            continue
        u, v = t.origin[d], t.target(d)
        mid = emb.arc_midpoints.get(ids[d])
        chain = [vid[u]]
        for p in _arc_points(emb.positions[u], emb.positions[v], mid, arc_steps):
            chain.append(emit(p))
        chain.append(vid[v])
        edge_polylines.append(chain)
    for chain in edge_polylines:
        lines.append("l " + " ".join(str(i) for i in chain))

    if include_faces:
        for f in range(t.num_faces):
            cyc = t.face_vertex_cycle(f)
            pts = [emb.positions[v] for v in cyc]
            centre = np.sum(pts, axis=0)
            norm = np.linalg.norm(centre)
            if norm < 1e-9:
                centre = np.cross(pts[1] - pts[0], pts[2] - pts[0])
                norm = np.linalg.norm(centre)
            centre = centre / norm
            apex = emit(centre)
            for i in range(len(cyc)):
                lines.append(
                    "f %d %d %d" % (apex, vid[cyc[i]], vid[cyc[(i + 1) % len(cyc)]])
                )
    return ("\n".join(lines) + "\n").encode()


def export_json(
    t: TilingMap,
    assign: AngleAssignment,
    emb: Optional[Embedding] = None,
    name: str = "tiling",
) -> bytes:
    """Deterministic JSON form: faces, angles (decimal strings), edge.

    Angles are serialized as 17-significant-digit decimal strings so
    golden files diff cleanly across platforms.
    """
    doc = {
        "name": name,
        "family": t.family,
        "faces": [list(t.face_vertex_cycle(f)) for f in range(t.num_faces)],
        "angles": {str(m): "%.17g" % a for m, a in sorted(assign.angles.items())},
        "edge": "%.17g" % assign.edge,
    }
    if emb is not None:
        doc["positions"] = [
            ["%.17g" % c for c in emb.positions[v]] for v in sorted(emb.positions)
        ]
    return (json.dumps(doc, sort_keys=True, indent=1) + "\n").encode()


def load_json(data: bytes):
    """Inverse of ``export_json``: (name, map, assignment, positions)."""
    doc = json.loads(data.decode())
    angles = {int(m): float(a) for m, a in doc["angles"].items()}
    assign = AngleAssignment(angles, float(doc["edge"]))
    family = doc.get("family")
    if family == "hosohedron":
        t = digon_fan(len(doc["faces"]))
    else:
        t = build_from_faces([tuple(f) for f in doc["faces"]], family=family)
    positions = None
    if "positions" in doc:
        positions = {
            i: np.array([float(c) for c in p]) for i, p in enumerate(doc["positions"])
        }
    return doc["name"], t, assign, positions
