"""The classified edge-to-edge spherical tilings by regular polygons.

``make(name)`` builds any member of the classification: the five Platonic
and thirteen Archimedean tilings, the twenty-five circumscribable Johnson
tilings, and the prism / antiprism / hosohedron / dihedron families.
Constructors are coordinate-free combinatorial recipes: rectification,
expansion, snubbing and truncation derive the Archimedean solids from
Platonic seeds, and the Johnson tilings come from the structural
operators (pyramid / cupola / prism subdivision, shrinking and
truncation, cupola rotation and diminishing, hemisphere rotation) applied
to their parents.

Every entry carries golden metric data (exact closed-form angles and edge
length) and a golden census, against which ``tilemap.validate`` runs.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

from .algsolve import AngleAssignment, snub_dodecahedron_cos, solve_vertex_system
from .sphkernel import TWO_PI, DomainError
from .tilemap import Census, TilingMap, build_from_faces, digon_fan

__all__ = [
    "Tiling",
    "CupolaSite",
    "UnknownName",
    "PreconditionFailed",
    "InvalidSite",
    "make",
    "make_prism",
    "make_antiprism",
    "make_hosohedron",
    "make_dihedron",
    "names",
    "family_of",
    "expected_census",
    "all_entries",
    "pyramid_subdivide",
    "cupola_subdivide",
    "prism_subdivide",
    "shrink",
    "truncate",
    "rotate_cupola",
    "diminish_cupola",
    "pyramid_diminish",
    "find_cupola_sites",
    "faces_of_size",
    "derive_from_ed",
    "manifest",
]


class UnknownName(KeyError):
    """No catalog entry with that name."""


class PreconditionFailed(ValueError):
    """An operator's angle or degree precondition does not hold."""


class InvalidSite(ValueError):
    """A cupola/hemisphere site specification is not applicable."""


class Tiling(NamedTuple):
    map: TilingMap
    angles: Optional[AngleAssignment]


PI = math.pi
_SQ2 = math.sqrt(2.0)
_SQ5 = math.sqrt(5.0)
_SQ33 = math.sqrt(33.0)


def _acot(x: float) -> float:
    return math.atan(1.0 / x)


def _cbrt(x: float) -> float:
    return x ** (1.0 / 3.0)


def faces_of_size(t: TilingMap, m: int) -> list:
    return [f for f in range(t.num_faces) if t.face_size(f) == m]


# --------------------------------------------------------------------------
# combinatorial derivation helpers
# --------------------------------------------------------------------------


def _dual_faces(t: TilingMap) -> list:
    return [tuple(t.face_of[d] for d in t.darts_at(v)) for v in range(t.num_vertices)]


def _rectified_faces(t: TilingMap) -> list:
    ids = t.edge_ids()
    faces = [tuple(ids[d] for d in cyc) for cyc in t.faces]
    faces += [tuple(ids[d] for d in t.darts_at(v)) for v in range(t.num_vertices)]
    return faces


def _expanded_faces(t: TilingMap) -> list:
    faces = [tuple(cyc) for cyc in t.faces]
    faces += [tuple(t.darts_at(v)) for v in range(t.num_vertices)]
    for d in range(t.num_darts):
        dp = t.edge_pair[d]
        if d < dp:
            faces.append((d, t.face_next[d], dp, t.face_next[dp]))
    return faces


def _snub_faces(t: TilingMap) -> list:
    faces = [tuple(cyc) for cyc in t.faces]
    faces += [tuple(t.darts_at(v)) for v in range(t.num_vertices)]
    for d in range(t.num_darts):
        dp = t.edge_pair[d]
        if d < dp:
            nd, ndp = t.face_next[d], t.face_next[dp]
            faces.append((d, nd, ndp))
            faces.append((nd, dp, ndp))
    return faces


def _truncated_all_faces(t: TilingMap) -> list:
    faces = []
    for cyc in t.faces:
        grown = []
        for d in cyc:
            grown.append(d)
            grown.append(t.edge_pair[d])
        faces.append(tuple(grown))
    faces += [tuple(t.darts_at(v)) for v in range(t.num_vertices)]
    return faces


def _prism_faces(m: int) -> list:
    top = list(range(m))
    bot = [m + i for i in range(m)]
    faces = [tuple(top), tuple(bot)]
    for i in range(m):
        j = (i + 1) % m
        faces.append((top[i], top[j], bot[j], bot[i]))
    return faces


def _antiprism_faces(m: int) -> list:
    top = list(range(m))
    bot = [m + i for i in range(m)]
    faces = [tuple(top), tuple(bot)]
    for i in range(m):
        j = (i + 1) % m
        faces.append((top[i], bot[i], top[j]))
        faces.append((bot[i], bot[j], top[j]))
    return faces


def _icosahedron_faces() -> list:
    up = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces.append((0, up[i], up[j]))
        faces.append((up[i], lo[i], up[j]))
        faces.append((lo[i], lo[j], up[j]))
        faces.append((11, lo[j], lo[i]))
    return faces


def _square_cupola_faces() -> list:
    # octagon base 0..7 (concave), top square 8..11
    faces = [tuple(range(8)), (8, 9, 10, 11)]
    for i in range(4):
        faces.append((2 * i, 2 * i + 1, 8 + i))
        faces.append((2 * i + 1, (2 * i + 2) % 8, 8 + (i + 1) % 4, 8 + i))
    return faces


def _pentagonal_cupola_faces() -> list:
    faces = [tuple(range(10)), (10, 11, 12, 13, 14)]
    for i in range(5):
        faces.append((2 * i, 2 * i + 1, 10 + i))
        faces.append((2 * i + 1, (2 * i + 2) % 10, 10 + (i + 1) % 5, 10 + i))
    return faces


def _elongated_square_cupola_faces() -> list:
    # top square 8..11, cupola ring 0..7, prism ring 12..19, octagon base
    faces = [(8, 9, 10, 11)]
    for i in range(4):
        faces.append((2 * i, 2 * i + 1, 8 + i))
        faces.append((2 * i + 1, (2 * i + 2) % 8, 8 + (i + 1) % 4, 8 + i))
    for i in range(8):
        faces.append((i, (i + 1) % 8, 12 + (i + 1) % 8, 12 + i))
    faces.append(tuple(12 + i for i in range(8)))
    return faces


# --------------------------------------------------------------------------
# structural operators
# --------------------------------------------------------------------------


def _face_lists(t: TilingMap) -> list:
    return [t.face_vertex_cycle(f) for f in range(t.num_faces)]


def _prune_angles(assign: AngleAssignment, t: TilingMap) -> AngleAssignment:
    present = {t.face_size(f) for f in range(t.num_faces)}
    kept = {m: a for m, a in assign.angles.items() if m in present}
    return AngleAssignment(kept, assign.edge)


def _require_angles(tiling: Tiling) -> AngleAssignment:
    if tiling.angles is None:
        raise PreconditionFailed("operation requires an angle assignment")
    return tiling.angles


def pyramid_subdivide(tiling: Tiling, face: int) -> Tiling:
    """Cone a face from a new central vertex, making m new triangles.

    Requires the face angle to equal twice the triangle angle, so the new
    triangles are regular.
    """
    t = tiling.map
    if t.family is not None:
        raise PreconditionFailed(f"pyramid subdivision undefined for {t.family} maps")
    assign = _require_angles(tiling)
    m = t.face_size(face)
    a3 = assign.angle(3) if 3 in assign.angles else None
    am = assign.angle(m)
    if a3 is None or abs(am - 2.0 * a3) > 1e-9:
        raise PreconditionFailed(
            f"pyramid subdivision needs angle({m}) = 2*angle(3); got {am}"
        )
    centre = ("pyramid-apex", face)
    cyc = t.face_vertex_cycle(face)
    faces = [c for f, c in enumerate(_face_lists(t)) if f != face]
    for i in range(m):
        faces.append((cyc[i], cyc[(i + 1) % m], centre))
    new_map = build_from_faces(faces)
    return Tiling(new_map, _prune_angles(assign, new_map))


def pyramid_diminish(tiling: Tiling, vertices: Sequence[int]) -> Tiling:
    """Remove vertices whose stars are all triangles, leaving link faces.

    The inverse of ``pyramid_subdivide``; the removed vertices must be
    pairwise non-adjacent with disjoint stars.
    """
    t = tiling.map
    assign = _require_angles(tiling)
    removed_faces: set = set()
    new_faces = []
    new_sizes = set()
    for v in vertices:
        star = [t.face_of[d] for d in t.darts_at(v)]
        if any(t.face_size(f) != 3 for f in star):
            raise PreconditionFailed(f"vertex {v} has a non-triangular face")
        if removed_faces.intersection(star):
            raise InvalidSite("vertex stars overlap")
        removed_faces.update(star)
        link = tuple(t.target(d) for d in t.darts_at(v))
        if any(u in vertices for u in link):
            raise InvalidSite("removed vertices are adjacent")
        new_faces.append(link)
        new_sizes.add(len(link))
    faces = [c for f, c in enumerate(_face_lists(t)) if f not in removed_faces]
    faces += new_faces
    new_map = build_from_faces(faces)
    angles = dict(assign.angles)
    for k in new_sizes:
        derived = 2.0 * assign.angle(3)
        if k in angles and abs(angles[k] - derived) > 1e-9:
            raise PreconditionFailed(f"size {k} angle inconsistent with 2*angle(3)")
        angles[k] = derived
    return Tiling(new_map, _prune_angles(AngleAssignment(angles, assign.edge), new_map))


def cupola_subdivide(tiling: Tiling, face: int, phase: int = 0) -> Tiling:
    """Attach a cupola cap inside an even face: triangles on every other
    edge, squares between them, and a half-size top face.

    Requires angle(m) = angle(3) + angle(4).  ``phase`` selects which edge
    parity carries the triangles; the two phases generally give the ortho
    and gyro attachments.
    """
    t = tiling.map
    assign = _require_angles(tiling)
    m = t.face_size(face)
    if m % 2 != 0 or m < 6:
        raise PreconditionFailed(f"cupola subdivision needs an even face size >= 6, got {m}")
    a3, a4, am = assign.angle(3), assign.angle(4), assign.angle(m)
    if abs(am - (a3 + a4)) > 1e-9:
        raise PreconditionFailed("cupola subdivision needs angle(m) = angle(3) + angle(4)")
    k = m // 2
    cyc = t.face_vertex_cycle(face)
    b = [cyc[(i + phase) % m] for i in range(m)]
    top = [("cupola-top", face, j) for j in range(k)]
    faces = [c for f, c in enumerate(_face_lists(t)) if f != face]
    for j in range(k):
        faces.append((b[2 * j], b[2 * j + 1], top[j]))
        faces.append((b[2 * j + 1], b[(2 * j + 2) % m], top[(j + 1) % k], top[j]))
    faces.append(tuple(top))
    new_map = build_from_faces(faces)
    angles = dict(assign.angles)
    derived = TWO_PI - 2.0 * a4 - a3
    if k in angles and abs(angles[k] - derived) > 1e-9:
        raise PreconditionFailed(f"size {k} angle inconsistent with the cupola top")
    angles[k] = derived
    return Tiling(new_map, _prune_angles(AngleAssignment(angles, assign.edge), new_map))


def prism_subdivide(tiling: Tiling, face: int) -> Tiling:
    """Line a (concave) face with squares, leaving a convex copy inside.

    Requires angle(m) = 2*angle(4).
    """
    t = tiling.map
    assign = _require_angles(tiling)
    m = t.face_size(face)
    a4, am = assign.angle(4), assign.angle(m)
    if abs(am - 2.0 * a4) > 1e-9:
        raise PreconditionFailed("prism subdivision needs angle(m) = 2*angle(4)")
    cyc = t.face_vertex_cycle(face)
    inner = [("prism-inner", face, i) for i in range(m)]
    faces = [c for f, c in enumerate(_face_lists(t)) if f != face]
    for i in range(m):
        j = (i + 1) % m
        faces.append((cyc[i], cyc[j], inner[j], inner[i]))
    faces.append(tuple(inner))
    new_map = build_from_faces(faces)
    angles = dict(assign.angles)
    angles[m] = TWO_PI - 2.0 * a4
    return Tiling(new_map, _prune_angles(AngleAssignment(angles, assign.edge), new_map))


def shrink(t: TilingMap, face: int) -> TilingMap:
    """Collapse a face whose vertices all have degree 3 to a single vertex."""
    if any(t.degree(v) != 3 for v in t.face_vertex_cycle(face)):
        raise PreconditionFailed("shrinking needs all face vertices of degree 3")
    fv = set(t.face_vertex_cycle(face))
    centre = ("shrink-centre", face)
    faces = []
    for f in range(t.num_faces):
        if f == face:
            continue
        cyc = [centre if v in fv else v for v in t.face_vertex_cycle(f)]
        collapsed = []
        for v in cyc:
            if collapsed and collapsed[-1] == v:
                continue
            collapsed.append(v)
        while len(collapsed) > 1 and collapsed[0] == collapsed[-1]:
            collapsed.pop()
        faces.append(tuple(collapsed))
    return build_from_faces(faces)


def truncate(t: TilingMap, vertex: int) -> TilingMap:
    """Replace a degree-k vertex by a k-gon (the inverse of shrinking)."""
    star = t.darts_at(vertex)
    ids = t.edge_ids()
    corner = {d: ("trunc", vertex, ids[d]) for d in star}
    new_faces = []
    for f in range(t.num_faces):
        if vertex not in t.face_vertex_cycle(f):
            new_faces.append(t.face_vertex_cycle(f))
            continue
        cyc = []
        darts = t.faces[f]
        k = len(darts)
        for i, d in enumerate(darts):
            if t.origin[d] != vertex:
                cyc.append(t.origin[d])
            else:
                arriving = t.edge_pair[t.face_prev[d]]
                cyc.append(corner[arriving])
                cyc.append(corner[d])
        new_faces.append(tuple(cyc))
    new_faces.append(tuple(corner[d] for d in star))
    return build_from_faces(new_faces)


def shrink_all(t: TilingMap, size: int) -> TilingMap:
    """Shrink every current face of the given size simultaneously.

    The targets must be pairwise vertex-disjoint with all their vertices
    of degree 3; faces of the same size created by the collapse itself are
    not re-shrunk.
    """
    targets = [f for f in range(t.num_faces) if t.face_size(f) == size]
    if not targets:
        return t
    owner: dict = {}
    for f in targets:
        for v in t.face_vertex_cycle(f):
            if t.degree(v) != 3:
                raise PreconditionFailed("shrinking needs all face vertices of degree 3")
            if v in owner:
                raise PreconditionFailed("shrink targets share a vertex")
            owner[v] = ("shrink-centre", f)
    faces = []
    for f in range(t.num_faces):
        if f in targets:
            continue
        cyc = [owner.get(v, v) for v in t.face_vertex_cycle(f)]
        collapsed = []
        for v in cyc:
            if collapsed and collapsed[-1] == v:
                continue
            collapsed.append(v)
        while len(collapsed) > 1 and collapsed[0] == collapsed[-1]:
            collapsed.pop()
        faces.append(tuple(collapsed))
    return build_from_faces(faces)


def truncate_all(t: TilingMap) -> TilingMap:
    """Truncate every vertex simultaneously."""
    return build_from_faces(_truncated_all_faces(t))


# --------------------------------------------------------------------------
# cupola sites, rotation and diminishing
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CupolaSite:
    """A cupola cap: top face, its ring of squares and triangles, and the
    ordered boundary cycle separating the cap from the rest."""

    top: int
    faces: frozenset
    boundary: tuple
    interior: frozenset

    @property
    def vertices(self) -> frozenset:
        return self.interior | frozenset(self.boundary)


def _region_boundary(t: TilingMap, region: frozenset) -> tuple:
    border = [
        d
        for d in range(t.num_darts)
        if t.face_of[d] in region and t.face_of[t.edge_pair[d]] not in region
    ]
    if not border:
        raise InvalidSite("region has no boundary")
    border_set = set(border)
    start = min(border)
    cycle = []
    d = start
    while True:
        cycle.append(d)
        nd = t.face_next[d]
        while nd not in border_set:
            nd = t.face_next[t.edge_pair[nd]]
        d = nd
        if d == start:
            break
        if len(cycle) > len(border):
            raise InvalidSite("region boundary is not a single cycle")
    if len(cycle) != len(border):
        raise InvalidSite("region boundary is not a single cycle")
    return tuple(t.origin[d] for d in cycle)


def find_cupola_sites(t: TilingMap) -> list:
    """All cupola caps of a map: a k-gon top (k = 3, 4 or 5) edged by
    squares with triangles at its corners, bounded by a 2k-cycle."""
    sites = []
    for top in range(t.num_faces):
        k = t.face_size(top)
        if k not in (3, 4, 5):
            continue
        ring = [t.face_of[t.edge_pair[d]] for d in t.faces[top]]
        if len(set(ring)) != k or any(t.face_size(f) != 4 for f in ring):
            continue
        corners = []
        ok = True
        for d in t.faces[top]:
            v = t.origin[d]
            if t.degree(v) != 4:
                ok = False
                break
            opposite = t.face_of[t.vertex_next[t.vertex_next[d]]]
            corners.append(opposite)
        if not ok or len(set(corners)) != k:
            continue
        if any(t.face_size(f) != 3 for f in corners):
            continue
        cap = frozenset([top] + ring + corners)
        if len(cap) != 2 * k + 1:
            continue
        try:
            boundary = _region_boundary(t, cap)
        except InvalidSite:
            continue
        if len(boundary) != 2 * k:
            continue
        interior = frozenset(t.face_vertex_cycle(top))
        if interior & set(boundary):
            continue
        sites.append(CupolaSite(top=top, faces=cap, boundary=boundary, interior=interior))
    return sites


def _apply_cupola_ops(
    tiling: Tiling,
    rotate_sites: Sequence[CupolaSite] = (),
    diminish_sites: Sequence[CupolaSite] = (),
    shift: int = 1,
) -> Tiling:
    t = tiling.map
    assign = _require_angles(tiling)
    sites = list(rotate_sites) + list(diminish_sites)
    for a, b in itertools.combinations(sites, 2):
        if a.vertices & b.vertices:
            raise InvalidSite("cupola sites overlap")
    cap_faces: set = set()
    for s in sites:
        cap_faces |= s.faces
    faces = [t.face_vertex_cycle(f) for f in range(t.num_faces) if f not in cap_faces]
    angles = dict(assign.angles)
    for s in rotate_sites:
        n = len(s.boundary)
        relabel = {s.boundary[i]: s.boundary[(i + shift) % n] for i in range(n)}
        for f in s.faces:
            faces.append(tuple(relabel.get(v, v) for v in t.face_vertex_cycle(f)))
    for s in diminish_sites:
        faces.append(s.boundary)
        b0 = s.boundary[0]
        outside = [
            t.face_size(t.face_of[d])
            for d in t.darts_at(b0)
            if t.face_of[d] not in s.faces
        ]
        derived = TWO_PI - sum(assign.angle(m) for m in outside)
        k = len(s.boundary)
        if k in angles and abs(angles[k] - derived) > 1e-9:
            raise InvalidSite(f"size {k} angle inconsistent at diminished site")
        angles[k] = derived
    new_map = build_from_faces(faces)
    return Tiling(new_map, _prune_angles(AngleAssignment(angles, assign.edge), new_map))


def rotate_cupola(tiling: Tiling, site: CupolaSite) -> Tiling:
    """Detach a cupola cap and reattach it offset by one boundary step."""
    return _apply_cupola_ops(tiling, rotate_sites=[site])


def diminish_cupola(tiling: Tiling, site: CupolaSite) -> Tiling:
    """Remove a cupola cap, making its boundary cycle a single face."""
    return _apply_cupola_ops(tiling, diminish_sites=[site])


# --------------------------------------------------------------------------
# hemispheres (equatorial straight cycles)
# --------------------------------------------------------------------------


def _straight_cycles(t: TilingMap) -> list:
    """Closed straight-ahead dart cycles through degree-4 vertices."""
    cycles = []
    seen: set = set()
    for d0 in range(t.num_darts):
        if d0 in seen:
            continue
        path = [d0]
        ok = True
        d = d0
        while True:
            dp = t.edge_pair[d]
            if t.degree(t.origin[dp]) != 4:
                ok = False
                break
            d = t.vertex_next[t.vertex_next[dp]]
            if d == d0:
                break
            if len(path) > t.num_darts:
                ok = False
                break
            path.append(d)
        if not ok:
            continue
        key = frozenset(min(x, t.edge_pair[x]) for x in path)
        if key in {frozenset(min(x, t.edge_pair[x]) for x in c) for c in cycles}:
            continue
        seen.update(path)
        seen.update(t.edge_pair[x] for x in path)
        cycles.append(path)
    return cycles


def equatorial_cycles(tiling: Tiling) -> list:
    """Straight cycles whose two sides both sum to angle pi at each vertex."""
    t = tiling.map
    assign = _require_angles(tiling)
    out = []
    for path in _straight_cycles(t):
        good = True
        for d in path:
            dp = t.edge_pair[d]
            side = (
                assign.angle(t.face_size(t.face_of[dp]))
                + assign.angle(t.face_size(t.face_of[t.vertex_next[dp]]))
            )
            if abs(side - PI) > 1e-9:
                good = False
                break
        if good:
            out.append(path)
    return out


def _split_sides(t: TilingMap, path: Sequence[int]) -> tuple:
    cycle_edges = {frozenset((t.origin[d], t.target(d))) for d in path}
    side_a: set = set()
    stack = [t.face_of[path[0]]]
    while stack:
        f = stack.pop()
        if f in side_a:
            continue
        side_a.add(f)
        for d in t.faces[f]:
            e = frozenset((t.origin[d], t.target(d)))
            if e in cycle_edges:
                continue
            g = t.face_of[t.edge_pair[d]]
            if g not in side_a:
                stack.append(g)
    side_b = set(range(t.num_faces)) - side_a
    return side_a, side_b


def rotate_hemisphere(tiling: Tiling, path: Sequence[int], shift: int = 1) -> Tiling:
    """Cut along an equatorial cycle and reglue one side offset by ``shift``."""
    t = tiling.map
    assign = _require_angles(tiling)
    side_a, side_b = _split_sides(t, path)
    ring = [t.origin[d] for d in path]
    n = len(ring)
    relabel = {ring[i]: ring[(i + shift) % n] for i in range(n)}
    faces = [t.face_vertex_cycle(f) for f in side_a]
    faces += [
        tuple(relabel.get(v, v) for v in t.face_vertex_cycle(f)) for f in side_b
    ]
    new_map = build_from_faces(faces)
    return Tiling(new_map, _prune_angles(assign, new_map))


def cut_hemisphere(tiling: Tiling, path: Sequence[int]) -> Tiling:
    """Keep one side of an equatorial cycle and seal it with one face.

    The new face is a hemisphere (angle pi), since the cycle is a great
    circle.
    """
    t = tiling.map
    assign = _require_angles(tiling)
    side_a, _ = _split_sides(t, path)
    ring = tuple(t.origin[d] for d in path)
    faces = [t.face_vertex_cycle(f) for f in side_a]
    faces.append(ring)
    new_map = build_from_faces(faces)
    angles = dict(assign.angles)
    k = len(ring)
    if k in angles and abs(angles[k] - PI) > 1e-9:
        raise InvalidSite(f"size {k} angle conflicts with a hemisphere face")
    angles[k] = PI
    return Tiling(new_map, _prune_angles(AngleAssignment(angles, assign.edge), new_map))


# --------------------------------------------------------------------------
# golden angle data
# --------------------------------------------------------------------------


def _assign(angles: dict, edge: float) -> AngleAssignment:
    return AngleAssignment(angles, edge)


@lru_cache(maxsize=None)
def _golden_angles(group: str) -> AngleAssignment:
    if group == "T":
        return _assign({3: 2 * PI / 3}, math.acos(-1.0 / 3.0))
    if group == "C":
        return _assign({4: 2 * PI / 3}, math.acos(1.0 / 3.0))
    if group == "D":
        return _assign({5: 2 * PI / 3}, math.acos(_SQ5 / 3.0))
    if group == "tT":
        a3 = 4.0 * _acot(math.sqrt(11.0))
        return _assign({3: a3, 6: PI - a3 / 2.0}, math.acos(7.0 / 11.0))
    if group == "tC":
        a3 = 4.0 * _acot(math.sqrt(7.0 + 4.0 * _SQ2))
        return _assign({3: a3, 8: PI - a3 / 2.0}, math.acos((3.0 + 8.0 * _SQ2) / 17.0))
    if group == "tO":
        a4 = 4.0 * _acot(_SQ5)
        return _assign({4: a4, 6: PI - a4 / 2.0}, math.acos(4.0 / 5.0))
    if group == "tD":
        a3 = 4.0 * _acot(math.sqrt(9.0 + 2.0 * _SQ5))
        return _assign(
            {3: a3, 10: PI - a3 / 2.0}, math.acos((24.0 + 15.0 * _SQ5) / 61.0)
        )
    if group == "tI":
        a5 = 4.0 * math.atan(math.sqrt((17.0 + 6.0 * _SQ5) / 109.0))
        return _assign(
            {5: a5, 6: PI - a5 / 2.0}, math.acos((80.0 + 9.0 * _SQ5) / 109.0)
        )
    if group == "sC":
        s = (
            19.0 / 21.0
            + _cbrt(4528.0 - 336.0 * _SQ33) / 21.0
            + _cbrt(4528.0 + 336.0 * _SQ33) / 21.0
        )
        a3 = 2.0 * _acot(math.sqrt(s))
        x = math.acos(
            (-1.0 + _cbrt(566.0 - 42.0 * _SQ33) + _cbrt(566.0 + 42.0 * _SQ33)) / 21.0
        )
        return _assign({3: a3, 4: TWO_PI - 4.0 * a3}, x)
    if group == "sD":
        xi = snub_dodecahedron_cos()
        a3 = math.acos(xi)
        return _assign({3: a3, 5: TWO_PI - 4.0 * a3}, math.acos(xi / (1.0 - xi)))
    if group == "bC":
        return _assign(
            {
                4: math.acos((_SQ2 - 2.0) / 12.0),
                6: math.acos((_SQ2 - 6.0) / 8.0),
                8: math.acos(-(6.0 * _SQ2 + 1.0) / 12.0),
            },
            math.acos((71.0 + 12.0 * _SQ2) / 97.0),
        )
    if group == "bD":
        return _assign(
            {
                4: math.acos((2.0 * _SQ5 - 5.0) / 30.0),
                6: math.acos((2.0 * _SQ5 - 15.0) / 20.0),
                10: math.acos(-(9.0 + 5.0 * _SQ5) / 24.0),
            },
            math.acos((179.0 + 24.0 * _SQ5) / 241.0),
        )
    if group == "O":
        # the octahedron group also hosts J1's hemisphere square
        return _assign({3: PI / 2.0, 4: PI}, PI / 2.0)
    if group == "I":
        return _assign({3: 2.0 * PI / 5.0, 5: 4.0 * PI / 5.0}, math.acos(1.0 / _SQ5))
    if group == "J2":
        return _assign({3: 2.0 * PI / 5.0, 5: 6.0 * PI / 5.0}, math.acos(1.0 / _SQ5))
    if group == "aC":
        a3 = math.acos(1.0 / 3.0)
        return _assign({3: a3, 4: PI - a3, 6: PI}, PI / 3.0)
    if group == "aD":
        a3 = math.acos(1.0 / _SQ5)
        return _assign({3: a3, 5: PI - a3, 10: PI}, PI / 5.0)
    if group == "eC":
        a4 = 2.0 * math.atan(math.sqrt(7.0 - 4.0 * _SQ2))
        x = math.acos((7.0 + 4.0 * _SQ2) / 17.0)
        # size 8 carries the convex octagon; J4's concave octagon is its
        # reflex complement 2*a4
        return _assign({3: TWO_PI - 3.0 * a4, 4: a4, 8: TWO_PI - 2.0 * a4}, x)
    if group == "eD":
        a3 = math.acos((5.0 + 2.0 * _SQ5) / 20.0)
        a4 = math.acos((2.0 * _SQ5 - 5.0) / 10.0)
        a5 = math.acos((5.0 - 9.0 * _SQ5) / 40.0)
        x = math.acos((19.0 + 8.0 * _SQ5) / 41.0)
        # size 10 carries the convex decagon of the diminished tilings;
        # J5's concave decagon is its reflex complement
        return _assign({3: a3, 4: a4, 5: a5, 10: a3 + a4}, x)
    raise UnknownName(group)


def _restrict(assign: AngleAssignment, sizes) -> AngleAssignment:
    return AngleAssignment({m: assign.angles[m] for m in sizes}, assign.edge)


@lru_cache(maxsize=None)
def _family_angles(kind: str, m: int) -> AngleAssignment:
    if kind == "prism":
        sols = [s for s in solve_vertex_system((4, 4, m)) if s.monotone_convex()]
    elif kind == "antiprism":
        sols = [s for s in solve_vertex_system((3, 3, 3, m)) if s.monotone_convex()]
    else:
        raise UnknownName(kind)
    if len(sols) != 1:
        raise RuntimeError(f"expected one admissible {kind}({m}) solution, got {len(sols)}")
    return sols[0]


# --------------------------------------------------------------------------
# entry builders
# --------------------------------------------------------------------------


def _tetrahedron() -> Tiling:
    m = build_from_faces([(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])
    return Tiling(m, _golden_angles("T"))


def _cube() -> Tiling:
    return Tiling(build_from_faces(_prism_faces(4)), _golden_angles("C"))


def _octahedron() -> Tiling:
    m = build_from_faces(_antiprism_faces(3))
    return Tiling(m, _restrict(_golden_angles("O"), [3]))


def _icosahedron() -> Tiling:
    return Tiling(build_from_faces(_icosahedron_faces()), _restrict(_golden_angles("I"), [3]))


def _dodecahedron() -> Tiling:
    m = build_from_faces(_dual_faces(_icosahedron().map))
    return Tiling(m, _golden_angles("D"))


def _truncated(seed_name: str, group: str) -> Tiling:
    seed = make(seed_name)
    return Tiling(truncate_all(seed.map), _golden_angles(group))


def _rectified(seed_name: str, group: str, sizes) -> Tiling:
    seed = make(seed_name)
    m = build_from_faces(_rectified_faces(seed.map))
    return Tiling(m, _restrict(_golden_angles(group), sizes))


def _expanded(seed_name: str, group: str, sizes) -> Tiling:
    seed = make(seed_name)
    m = build_from_faces(_expanded_faces(seed.map))
    return Tiling(m, _restrict(_golden_angles(group), sizes))


def _snubbed(seed_name: str, group: str) -> Tiling:
    seed = make(seed_name)
    m = build_from_faces(_snub_faces(seed.map))
    return Tiling(m, _golden_angles(group))


def _j1() -> Tiling:
    m = build_from_faces([(0, 1, 2, 3), (4, 1, 0), (4, 2, 1), (4, 3, 2), (4, 0, 3)])
    return Tiling(m, _golden_angles("O"))


def _j2() -> Tiling:
    m = build_from_faces(
        [(0, 1, 2, 3, 4), (5, 1, 0), (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 0, 4)]
    )
    return Tiling(m, _golden_angles("J2"))


def _j3() -> Tiling:
    ac = make("aC")
    sites = find_cupola_sites(ac.map)
    return diminish_cupola(ac, _canonical_sites(ac.map, sites)[0])


def _j4() -> Tiling:
    m = build_from_faces(_square_cupola_faces())
    base = _golden_angles("eC")
    angles = dict(base.angles)
    angles[8] = TWO_PI - angles[8]  # the standalone cupola's octagon is concave
    return Tiling(m, AngleAssignment(angles, base.edge))


def _j5() -> Tiling:
    m = build_from_faces(_pentagonal_cupola_faces())
    base = _golden_angles("eD")
    angles = dict(base.angles)
    angles[10] = TWO_PI - angles[10]  # concave decagon under the cap
    return Tiling(m, AngleAssignment(angles, base.edge))


def _j6() -> Tiling:
    ad = make("aD")
    path = equatorial_cycles(ad)[0]
    return cut_hemisphere(ad, path)


def _j19() -> Tiling:
    m = build_from_faces(_elongated_square_cupola_faces())
    return Tiling(m, _golden_angles("eC"))


def _j27() -> Tiling:
    ac = make("aC")
    path = equatorial_cycles(ac)[0]
    return rotate_hemisphere(ac, path)


def _j34() -> Tiling:
    ad = make("aD")
    path = equatorial_cycles(ad)[0]
    return rotate_hemisphere(ad, path)


def _j37() -> Tiling:
    ec = make("eC")
    sites = _canonical_sites(ec.map, find_cupola_sites(ec.map))
    return rotate_cupola(ec, sites[0])


def _icosa_distances():
    ico = _icosahedron().map
    n = ico.num_vertices
    adj = [set() for _ in range(n)]
    for u, v in ico.edges:
        adj[u].add(v)
        adj[v].add(u)
    dist = [[-1] * n for _ in range(n)]
    for s in range(n):
        dist[s][s] = 0
        queue = [s]
        while queue:
            u = queue.pop(0)
            for w in adj[u]:
                if dist[s][w] < 0:
                    dist[s][w] = dist[s][u] + 1
                    queue.append(w)
    return ico, dist


def _diminished_icosahedron(n_removed: int, antipodal: bool = False) -> Tiling:
    ico, dist = _icosa_distances()
    tiling = Tiling(ico, _restrict(_golden_angles("I"), [3]))
    v0 = 0
    if n_removed == 1:
        picks = [v0]
    elif n_removed == 2 and antipodal:
        picks = [v0, dist[v0].index(3)]
    elif n_removed == 2:
        picks = [v0, dist[v0].index(2)]
    elif n_removed == 3:
        two = dist[v0].index(2)
        third = next(
            w
            for w in range(ico.num_vertices)
            if dist[v0][w] == 2 and dist[two][w] == 2 and w != two
        )
        picks = [v0, two, third]
    else:
        raise UnknownName(f"no {n_removed}-fold diminished icosahedron")
    return pyramid_diminish(tiling, picks)


def _j11() -> Tiling:
    return _diminished_icosahedron(1)


def _j62() -> Tiling:
    return _diminished_icosahedron(2)


def _j63() -> Tiling:
    return _diminished_icosahedron(3)


# --- eD cupola machinery ----------------------------------------------------


def _canonical_sites(t: TilingMap, sites) -> list:
    return sorted(sites, key=lambda s: tuple(sorted(t.face_vertex_cycle(s.top))))


@lru_cache(maxsize=1)
def _ed_site_data():
    """eD's 12 pentagonal cupola sites, a canonical disjoint triple and the
    opposite-site map (the unique disjoint site at maximal dual distance)."""
    ed = make("eD")
    t = ed.map
    sites = _canonical_sites(t, find_cupola_sites(t))
    if len(sites) != 12:
        raise RuntimeError(f"expected 12 cupola sites in eD, found {len(sites)}")
    # dual-graph distances between top faces
    nf = t.num_faces
    fadj = [set() for _ in range(nf)]
    for d in range(t.num_darts):
        fadj[t.face_of[d]].add(t.face_of[t.edge_pair[d]])
    tops = [s.top for s in sites]
    dual_dist = {}
    for s in sites:
        dist = {s.top: 0}
        queue = [s.top]
        while queue:
            u = queue.pop(0)
            for w in fadj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        dual_dist[s.top] = dist
    max_d = max(dual_dist[a.top][b.top] for a in sites for b in sites)
    opposite = {}
    for a in sites:
        far = [b for b in sites if dual_dist[a.top][b.top] == max_d]
        if len(far) != 1:
            raise RuntimeError("opposite cupola is not unique")
        opposite[a.top] = far[0]
    disjoint = {
        a.top: [b for b in sites if b is not a and not (a.vertices & b.vertices)]
        for a in sites
    }
    a = sites[0]
    triple = None
    for b in disjoint[a.top]:
        for c in disjoint[a.top]:
            if c is b:
                continue
            if not (b.vertices & c.vertices):
                triple = (a, b, c)
                break
        if triple:
            break
    if triple is None:
        raise RuntimeError("no disjoint cupola triple in eD")
    # prefer a triple without opposite pairs (always true: opposite pairs
    # exclude any third disjoint site)
    return ed, sites, opposite, disjoint, triple


def derive_from_ed(
    dim: int = 0,
    rot: int = 0,
    dim_rel: Optional[str] = None,
    rot_rel: Optional[str] = None,
) -> Tiling:
    """Apply a diminish/rotate recipe to eD's pentagonal cupolas.

    ``dim``/``rot`` count the operations; a relation ``"o"`` (opposite) or
    ``"n"`` (non-opposite) qualifies a pair, either within one kind or,
    when one of each is requested, between the two sites.
    """
    ed, sites, opposite, disjoint, triple = _ed_site_data()
    a, b, c = triple
    if dim < 0 or rot < 0:
        raise InvalidSite("negative operation counts")
    if dim + rot > 3:
        raise InvalidSite("at most three pairwise disjoint cupolas exist")
    if dim + rot == 2:
        # two sites can sit opposite or not, and the results differ
        rel = dim_rel or rot_rel
        if rel not in ("o", "n"):
            raise InvalidSite(
                "a pair of cupola operations needs an 'o' or 'n' qualifier"
            )
        pair = [a, opposite[a.top]] if rel == "o" else [a, b]
        dims, rots = pair[:dim], pair[dim:]
    else:
        # one or three sites: any choice from the disjoint triple works
        chosen = [a, b, c][: dim + rot]
        dims, rots = chosen[:dim], chosen[dim:]
    return _apply_cupola_ops(ed, rotate_sites=rots, diminish_sites=dims)


_ED_RECIPES = {
    # corrected rotation-only rows: the rotated-two tilings carry no decagon
    "J72": dict(rot=1),
    "J73": dict(rot=2, rot_rel="o"),
    "J74": dict(rot=2, rot_rel="n"),
    "J75": dict(rot=3),
    "J76": dict(dim=1),
    "J77": dict(dim=1, rot=1, rot_rel="o"),
    "J78": dict(dim=1, rot=1, rot_rel="n"),
    "J79": dict(dim=1, rot=2),
    "J80": dict(dim=2, dim_rel="o"),
    "J81": dict(dim=2, dim_rel="n"),
    "J82": dict(dim=2, rot=1),
    "J83": dict(dim=3),
}


def _ed_modified(name: str) -> Tiling:
    r = _ED_RECIPES[name]
    return derive_from_ed(
        dim=r.get("dim", 0),
        rot=r.get("rot", 0),
        dim_rel=r.get("dim_rel"),
        rot_rel=r.get("rot_rel"),
    )


def make_prism(m: int) -> Tiling:
    """Prism over an m-gon; prism(4) is the cube."""
    if m < 3:
        raise DomainError(f"prism needs m >= 3, got {m}")
    if m == 4:
        return _cube()
    return Tiling(build_from_faces(_prism_faces(m)), _family_angles("prism", m))


def make_antiprism(m: int) -> Tiling:
    """Antiprism over an m-gon; antiprism(3) is the octahedron."""
    if m < 3:
        raise DomainError(f"antiprism needs m >= 3, got {m}")
    if m == 3:
        return _octahedron()
    return Tiling(build_from_faces(_antiprism_faces(m)), _family_angles("antiprism", m))


def make_hosohedron(n: int) -> Tiling:
    """Fan of n digons between two poles; angle 2*pi/n, edge pi."""
    if n < 3:
        raise DomainError(f"hosohedron needs n >= 3, got {n}")
    return Tiling(digon_fan(n), AngleAssignment({2: TWO_PI / n}, PI))


def make_dihedron(n: int) -> Tiling:
    """Two hemispherical n-gons sharing a great-circle boundary."""
    if n < 3:
        raise DomainError(f"dihedron needs n >= 3, got {n}")
    ring = tuple(range(n))
    m = build_from_faces([ring, ring], family="dihedron")
    return Tiling(m, AngleAssignment({n: PI}, TWO_PI / n))


_BUILDERS = {
    "T": _tetrahedron,
    "C": _cube,
    "O": _octahedron,
    "D": _dodecahedron,
    "I": _icosahedron,
    "tT": lambda: _truncated("T", "tT"),
    "tC": lambda: _truncated("C", "tC"),
    "tO": lambda: _truncated("O", "tO"),
    "tD": lambda: _truncated("D", "tD"),
    "tI": lambda: _truncated("I", "tI"),
    "aC": lambda: _rectified("C", "aC", [3, 4]),
    "aD": lambda: _rectified("D", "aD", [3, 5]),
    "eC": lambda: _expanded("C", "eC", [3, 4]),
    "eD": lambda: _expanded("D", "eD", [3, 4, 5]),
    "bC": lambda: _truncated("aC", "bC"),
    "bD": lambda: _truncated("aD", "bD"),
    "sC": lambda: _snubbed("C", "sC"),
    "sD": lambda: _snubbed("D", "sD"),
    "J1": _j1,
    "J2": _j2,
    "J3": _j3,
    "J4": _j4,
    "J5": _j5,
    "J6": _j6,
    "J11": _j11,
    "J19": _j19,
    "J27": _j27,
    "J34": _j34,
    "J37": _j37,
    "J62": _j62,
    "J63": _j63,
    **{name: (lambda n=name: _ed_modified(n)) for name in _ED_RECIPES},
}

PLATONIC = ("T", "C", "O", "D", "I")
ARCHIMEDEAN = ("tT", "aC", "tC", "tO", "eC", "bC", "sC", "aD", "tD", "tI", "eD", "bD", "sD")
JOHNSON = (
    "J1", "J2", "J3", "J4", "J5", "J6", "J11", "J19", "J27", "J34", "J37",
    "J62", "J63", "J72", "J73", "J74", "J75", "J76", "J77", "J78", "J79",
    "J80", "J81", "J82", "J83",
)

_FAMILY_RE = re.compile(r"^(prism|antiprism|hosohedron|dihedron)\((\d+)\)$")


def names() -> list:
    """The named (non-parametric) catalog entries in canonical order."""
    return list(PLATONIC + ARCHIMEDEAN + JOHNSON)


def family_of(name: str) -> str:
    if name in PLATONIC:
        return "platonic"
    if name in ARCHIMEDEAN:
        return "archimedean"
    if name in JOHNSON:
        return "johnson"
    m = _FAMILY_RE.match(name)
    if m:
        return m.group(1)
    raise UnknownName(name)


@lru_cache(maxsize=None)
def make(name: str) -> Tiling:
    """Build a catalog tiling by name.

    Accepts the named entries (``T`` ... ``sD``, ``J1`` ... ``J83``) and the
    parametric families ``prism(m)``, ``antiprism(m)``, ``hosohedron(n)``,
    ``dihedron(n)``.
    """
    if name in _BUILDERS:
        return _BUILDERS[name]()
    m = _FAMILY_RE.match(name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        return {
            "prism": make_prism,
            "antiprism": make_antiprism,
            "hosohedron": make_hosohedron,
            "dihedron": make_dihedron,
        }[kind](n)
    raise UnknownName(name)


def all_entries(family_n=range(3, 13)) -> list:
    """Names of every catalog entry, families instantiated over a range."""
    out = names()
    for kind in ("prism", "antiprism", "hosohedron", "dihedron"):
        for n in family_n:
            out.append(f"{kind}({n})")
    return out


# --------------------------------------------------------------------------
# golden censuses
# --------------------------------------------------------------------------

_ED_FACES = {3: 20, 4: 30, 5: 12}
_ED1_FACES = {3: 15, 4: 25, 5: 11, 10: 1}
_ED2_FACES = {3: 10, 4: 20, 5: 10, 10: 2}

_GOLDEN_CENSUS = {
    "T": ({(3, 3, 3): 4}, {3: 4}),
    "C": ({(4, 4, 4): 8}, {4: 6}),
    "O": ({(3, 3, 3, 3): 6}, {3: 8}),
    "D": ({(5, 5, 5): 20}, {5: 12}),
    "I": ({(3, 3, 3, 3, 3): 12}, {3: 20}),
    "tT": ({(3, 6, 6): 12}, {3: 4, 6: 4}),
    "tC": ({(3, 8, 8): 24}, {3: 8, 8: 6}),
    "tO": ({(4, 6, 6): 24}, {4: 6, 6: 8}),
    "tD": ({(3, 10, 10): 60}, {3: 20, 10: 12}),
    "tI": ({(5, 6, 6): 60}, {5: 12, 6: 20}),
    "aC": ({(3, 4, 3, 4): 12}, {3: 8, 4: 6}),
    "aD": ({(3, 5, 3, 5): 30}, {3: 20, 5: 12}),
    "eC": ({(3, 4, 4, 4): 24}, {3: 8, 4: 18}),
    "eD": ({(3, 4, 5, 4): 60}, _ED_FACES),
    "bC": ({(4, 6, 8): 48}, {4: 12, 6: 8, 8: 6}),
    "bD": ({(4, 6, 10): 120}, {4: 30, 6: 20, 10: 12}),
    "sC": ({(3, 3, 3, 3, 4): 24}, {3: 32, 4: 6}),
    "sD": ({(3, 3, 3, 3, 5): 60}, {3: 80, 5: 12}),
    "J1": ({(3, 3, 4): 4, (3, 3, 3, 3): 1}, {3: 4, 4: 1}),
    "J2": ({(3, 3, 5): 5, (3, 3, 3, 3, 3): 1}, {3: 5, 5: 1}),
    "J3": ({(3, 4, 6): 6, (3, 4, 3, 4): 3}, {3: 4, 4: 3, 6: 1}),
    "J4": ({(3, 4, 8): 8, (3, 4, 4, 4): 4}, {3: 4, 4: 5, 8: 1}),
    "J5": ({(3, 4, 5, 4): 5, (3, 4, 10): 10}, {3: 5, 4: 5, 5: 1, 10: 1}),
    "J6": ({(3, 5, 3, 5): 10, (3, 5, 10): 10}, {3: 10, 5: 6, 10: 1}),
    "J11": ({(3, 3, 3, 5): 5, (3, 3, 3, 3, 3): 6}, {3: 15, 5: 1}),
    # the octagon count follows from the handshake identity 2e = sum(m*f_m)
    "J19": ({(3, 4, 4, 4): 12, (4, 4, 8): 8}, {3: 4, 4: 13, 8: 1}),
    "J27": ({(3, 3, 4, 4): 6, (3, 4, 3, 4): 6}, {3: 8, 4: 6}),
    "J34": ({(3, 5, 3, 5): 20, (3, 3, 5, 5): 10}, {3: 20, 5: 12}),
    "J37": ({(3, 4, 4, 4): 24}, {3: 8, 4: 18}),
    "J62": ({(3, 5, 5): 2, (3, 3, 3, 5): 6, (3, 3, 3, 3, 3): 2}, {3: 10, 5: 2}),
    "J63": ({(3, 5, 5): 6, (3, 3, 3, 5): 3}, {3: 5, 5: 3}),
    "J72": ({(3, 4, 5, 4): 50, (3, 4, 4, 5): 10}, _ED_FACES),
    "J73": ({(3, 4, 5, 4): 40, (3, 4, 4, 5): 20}, _ED_FACES),
    "J74": ({(3, 4, 5, 4): 40, (3, 4, 4, 5): 20}, _ED_FACES),
    "J75": ({(3, 4, 5, 4): 30, (3, 4, 4, 5): 30}, _ED_FACES),
    "J76": ({(3, 4, 5, 4): 45, (4, 5, 10): 10}, _ED1_FACES),
    "J77": ({(3, 4, 5, 4): 35, (3, 4, 4, 5): 10, (4, 5, 10): 10}, _ED1_FACES),
    "J78": ({(3, 4, 5, 4): 35, (3, 4, 4, 5): 10, (4, 5, 10): 10}, _ED1_FACES),
    "J79": ({(3, 4, 5, 4): 25, (3, 4, 4, 5): 20, (4, 5, 10): 10}, _ED1_FACES),
    "J80": ({(3, 4, 5, 4): 30, (4, 5, 10): 20}, _ED2_FACES),
    "J81": ({(3, 4, 5, 4): 30, (4, 5, 10): 20}, _ED2_FACES),
    "J82": ({(3, 4, 5, 4): 20, (3, 4, 4, 5): 10, (4, 5, 10): 20}, _ED2_FACES),
    "J83": ({(3, 4, 5, 4): 15, (4, 5, 10): 30}, {3: 5, 4: 15, 5: 9, 10: 3}),
}


def expected_census(name: str) -> Census:
    """The golden census of a catalog entry."""
    m = _FAMILY_RE.match(name)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "prism":
            from .vertexcomb import canonical_arrangement

            return Census({canonical_arrangement((4, 4, n)): 2 * n},
                          ({4: 6} if n == 4 else {4: n, n: 2}), 2 * n, 3 * n, n + 2)
        if kind == "antiprism":
            from .vertexcomb import canonical_arrangement

            fc = {3: 8} if n == 3 else {3: 2 * n, n: 2}
            return Census({canonical_arrangement((3, 3, 3, n)): 2 * n}, fc, 2 * n, 4 * n, 2 * n + 2)
        if kind == "hosohedron":
            return Census({(2,) * n: 2}, {2: n}, 2, n, n)
        if kind == "dihedron":
            return Census({(n, n): n}, {n: 2}, n, n, 2)
    try:
        vtypes, fcounts = _GOLDEN_CENSUS[name]
    except KeyError:
        raise UnknownName(name) from None
    e = sum(m_ * k for m_, k in fcounts.items()) // 2
    f = sum(fcounts.values())
    v = 2 + e - f
    return Census(dict(vtypes), dict(fcounts), v, e, f)


def manifest(family_n=range(3, 13)) -> dict:
    """Machine-readable catalog summary: names, families and censuses."""
    entries = []
    for name in all_entries(family_n):
        c = expected_census(name)
        entries.append(
            {
                "name": name,
                "family": family_of(name),
                "v": c.v,
                "e": c.e,
                "f": c.f,
                "face_counts": {str(m): k for m, k in sorted(c.face_counts.items())},
                "vertex_types": {
                    ".".join(str(s) for s in arr): k
                    for arr, k in sorted(c.vertex_types.items())
                },
            }
        )
    return {"entries": entries}
