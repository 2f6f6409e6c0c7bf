"""Combinatorial maps of spherical tilings, validation and isomorphism.

A tiling is stored as a dart-based combinatorial map: every edge side
gets a directed dart, ``face_next`` walks each face boundary in a
globally consistent orientation, and ``edge_pair`` swaps the two darts of
an edge.  The composition ``face_next[edge_pair[d]]`` rotates a dart
around its origin vertex, which yields vertex degrees and the cyclic
arrangement of face sizes at each vertex.

``build_from_faces`` accepts plain vertex-index cycles (with arbitrary
per-face orientations, which are fixed up automatically), so constructors
can work with simple face lists.  Hosohedra need parallel edges and are
built directly with ``digon_fan``.

Validation covers the counting identities (Euler, degree and face
handshakes), metric consistency of an angle assignment (vertex angle sums
of 2*pi, total spherical area 4*pi, the companion relation), degree and
vertex-type admissibility, and the at-most-one-non-strictly-convex-face
rule.  Isomorphism (allowing reflection, preserving face sizes) uses a
canonical rooted-dart traversal form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Mapping, Optional, Sequence

from . import vertexcomb
from .algsolve import AngleAssignment
from .sphkernel import TWO_PI, polygon_area

__all__ = [
    "TilingMap",
    "Census",
    "ValidationReport",
    "CheckResult",
    "NotEdgeToEdge",
    "Disconnected",
    "build_from_faces",
    "digon_fan",
    "census",
    "validate",
    "isomorphic",
    "homogeneity",
]


class NotEdgeToEdge(ValueError):
    """The face data does not describe an edge-to-edge map."""


class Disconnected(ValueError):
    """The face data describes a disconnected complex."""


@dataclass(frozen=True)
class TilingMap:
    """Immutable dart-based map of a spherical tiling.

    ``origin[d]`` is the tail vertex of dart ``d``; ``face_next[d]`` the
    next dart of the same face; ``edge_pair[d]`` the opposite dart of the
    same edge.  ``family`` marks the degenerate families (``"hosohedron"``
    or ``"dihedron"``) whose maps relax the usual degree and face-size
    bounds.
    """

    origin: tuple
    face_next: tuple
    edge_pair: tuple
    face_of: tuple
    faces: tuple
    family: Optional[str] = None

    # -- elementary counts -------------------------------------------------

    @property
    def num_darts(self) -> int:
        return len(self.origin)

    @property
    def num_edges(self) -> int:
        return len(self.origin) // 2

    @cached_property
    def num_vertices(self) -> int:
        return 1 + max(self.origin)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def target(self, d: int) -> int:
        return self.origin[self.edge_pair[d]]

    def face_size(self, f: int) -> int:
        return len(self.faces[f])

    @cached_property
    def face_prev(self) -> tuple:
        prev = [0] * self.num_darts
        for d, nd in enumerate(self.face_next):
            prev[nd] = d
        return tuple(prev)

    @cached_property
    def vertex_next(self) -> tuple:
        """Next dart counter to face orientation around the origin vertex."""
        return tuple(self.face_next[self.edge_pair[d]] for d in range(self.num_darts))

    @cached_property
    def vertex_darts(self) -> tuple:
        first = [-1] * self.num_vertices
        for d, v in enumerate(self.origin):
            if first[v] < 0:
                first[v] = d
        return tuple(first)

    def darts_at(self, v: int) -> list:
        out = []
        d0 = self.vertex_darts[v]
        d = d0
        while True:
            out.append(d)
            d = self.vertex_next[d]
            if d == d0:
                break
        return out

    def degree(self, v: int) -> int:
        return len(self.darts_at(v))

    def vertex_face_sizes(self, v: int) -> tuple:
        """Face sizes around ``v`` in rotation order (one full cycle)."""
        return tuple(len(self.faces[self.face_of[d]]) for d in self.darts_at(v))

    @cached_property
    def vertex_arrangements(self) -> tuple:
        return tuple(
            vertexcomb.canonical_arrangement(self.vertex_face_sizes(v))
            for v in range(self.num_vertices)
        )

    def face_vertex_cycle(self, f: int) -> tuple:
        return tuple(self.origin[d] for d in self.faces[f])

    def face_vertex_cycles(self) -> list:
        return [self.face_vertex_cycle(f) for f in range(self.num_faces)]

    @cached_property
    def edges(self) -> tuple:
        out = []
        for d in range(self.num_darts):
            if d < self.edge_pair[d]:
                out.append((self.origin[d], self.target(d)))
        return tuple(out)

    def edge_ids(self) -> dict:
        """Map each dart to a dense edge id (shared by its pair)."""
        ids = {}
        nxt = 0
        for d in range(self.num_darts):
            if d < self.edge_pair[d]:
                ids[d] = nxt
                ids[self.edge_pair[d]] = nxt
                nxt += 1
        return ids

    # -- canonical form ----------------------------------------------------

    def _signature(self, start: int, reflected: bool) -> tuple:
        nxt = self.face_prev if reflected else self.face_next
        pair = self.edge_pair
        n = self.num_darts
        ids = [-1] * n
        order = [start]
        ids[start] = 0
        head = 0
        while head < len(order):
            d = order[head]
            head += 1
            for nb in (nxt[d], pair[d]):
                if ids[nb] < 0:
                    ids[nb] = len(order)
                    order.append(nb)
        sig = []
        sizes = self.face_of
        for d in order:
            sig.append(ids[nxt[d]])
            sig.append(ids[pair[d]])
            sig.append(len(self.faces[sizes[d]]))
        return tuple(sig)

    @cached_property
    def _start_darts(self) -> tuple:
        # restrict canonical-form starts to an isomorphism-invariant dart
        # class (rarest wins) to keep the search small
        classes: dict = {}
        for d in range(self.num_darts):
            key = (
                len(self.faces[self.face_of[d]]),
                len(self.faces[self.face_of[self.edge_pair[d]]]),
                self.vertex_arrangements[self.origin[d]],
            )
            classes.setdefault(key, []).append(d)
        # tie-break on the (isomorphism-invariant) class key, never on ids
        best_key = min(classes, key=lambda k: (len(classes[k]), k))
        return tuple(classes[best_key])

    @cached_property
    def canonical_form(self) -> tuple:
        best = None
        for reflected in (False, True):
            for d in self._start_darts:
                sig = self._signature(d, reflected)
                if best is None or sig < best:
                    best = sig
        return best

    @cached_property
    def _invariant_key(self) -> tuple:
        fc = {}
        for f in self.faces:
            fc[len(f)] = fc.get(len(f), 0) + 1
        arr = {}
        for a in self.vertex_arrangements:
            arr[a] = arr.get(a, 0) + 1
        return (
            self.num_vertices,
            self.num_edges,
            self.num_faces,
            tuple(sorted(fc.items())),
            tuple(sorted(arr.items())),
        )


@dataclass(frozen=True)
class Census:
    """Vertex-arrangement counts, face-size counts and the V, E, F totals."""

    vertex_types: Mapping
    face_counts: Mapping
    v: int
    e: int
    f: int

    def type_counts(self) -> dict:
        """Counts by unordered vertex type (multiset of sizes)."""
        out: dict = {}
        for arr, n in self.vertex_types.items():
            key = tuple(sorted(arr))
            out[key] = out.get(key, 0) + n
        return out


def census(t: TilingMap) -> Census:
    """Arrangement-level vertex census and face counts of a map."""
    vtypes: dict = {}
    for arr in t.vertex_arrangements:
        vtypes[arr] = vtypes.get(arr, 0) + 1
    fcounts: dict = {}
    for f in t.faces:
        fcounts[len(f)] = fcounts.get(len(f), 0) + 1
    return Census(
        vertex_types=dict(sorted(vtypes.items())),
        face_counts=dict(sorted(fcounts.items())),
        v=t.num_vertices,
        e=t.num_edges,
        f=t.num_faces,
    )


# --------------------------------------------------------------------------
# construction
# --------------------------------------------------------------------------


def build_from_faces(faces: Sequence[Sequence], family: Optional[str] = None) -> TilingMap:
    """Build a map from vertex-index cycles, one per face.

    Every undirected vertex pair adjacent in the cycles must occur in
    exactly two faces (else ``NotEdgeToEdge``) and the complex must be
    connected (else ``Disconnected``).  Per-face orientations are fixed up
    automatically.  Vertex labels may be arbitrary hashables; they are
    relabelled densely in first-seen order.
    """
    cycles = [tuple(f) for f in faces]
    if not cycles:
        raise NotEdgeToEdge("no faces")
    for f in cycles:
        if len(f) < 2:
            raise NotEdgeToEdge(f"face {f} has fewer than 2 vertices")
        if len(f) == 2 and family != "hosohedron":
            raise NotEdgeToEdge("digon faces only arise in the hosohedron family")
        if len(set(f)) != len(f):
            raise NotEdgeToEdge(f"face {f} repeats a vertex")

    incident: dict = {}
    for fi, f in enumerate(cycles):
        k = len(f)
        for i in range(k):
            u, v = f[i], f[(i + 1) % k]
            key = frozenset((u, v))
            incident.setdefault(key, []).append(fi)
    for key, fs in incident.items():
        if len(fs) != 2:
            raise NotEdgeToEdge(
                f"edge {tuple(key)} lies on {len(fs)} faces, expected 2"
            )

    # orient faces consistently: each directed edge must appear exactly once
    oriented: list = [None] * len(cycles)
    seen_faces = 0
    for seed in range(len(cycles)):
        if oriented[seed] is not None:
            continue
        if seed > 0 and seen_faces:
            raise Disconnected("face complex is not connected")
        oriented[seed] = cycles[seed]
        stack = [seed]
        while stack:
            fi = stack.pop()
            f = oriented[fi]
            k = len(f)
            for i in range(k):
                u, v = f[i], f[(i + 1) % k]
                pair = incident[frozenset((u, v))]
                gi = pair[0] if pair[1] == fi else pair[1]
                if gi == fi:
                    gi = pair[1] if pair[0] == fi else pair[0]
                g = cycles[gi]
                directed = _directed_edges(g)
                if oriented[gi] is None:
                    if (u, v) in directed:
                        oriented[gi] = g[::-1]
                    else:
                        oriented[gi] = g
                    stack.append(gi)
                else:
                    if (u, v) in _directed_edges(oriented[gi]):
                        raise NotEdgeToEdge("faces cannot be oriented consistently")
        seen_faces += 1

    # dense vertex ids in first-seen order
    vid: dict = {}
    for f in oriented:
        for v in f:
            if v not in vid:
                vid[v] = len(vid)

    origin = []
    face_next = []
    face_of = []
    face_darts = []
    directed_to_dart: dict = {}
    for fi, f in enumerate(oriented):
        k = len(f)
        base = len(origin)
        ds = tuple(range(base, base + k))
        face_darts.append(ds)
        for i in range(k):
            u, v = vid[f[i]], vid[f[(i + 1) % k]]
            origin.append(u)
            face_next.append(base + (i + 1) % k)
            face_of.append(fi)
            key = (u, v)
            if key in directed_to_dart:
                raise NotEdgeToEdge(f"directed edge {key} duplicated")
            directed_to_dart[key] = base + i

    edge_pair = [0] * len(origin)
    for (u, v), d in directed_to_dart.items():
        try:
            edge_pair[d] = directed_to_dart[(v, u)]
        except KeyError:
            raise NotEdgeToEdge(f"edge ({u}, {v}) has no partner") from None

    t = TilingMap(
        origin=tuple(origin),
        face_next=tuple(face_next),
        edge_pair=tuple(edge_pair),
        face_of=tuple(face_of),
        faces=tuple(face_darts),
        family=family,
    )
    _check_connected(t)
    return t


def _directed_edges(cycle) -> set:
    k = len(cycle)
    return {(cycle[i], cycle[(i + 1) % k]) for i in range(k)}


def _check_connected(t: TilingMap) -> None:
    n = t.num_vertices
    adj: list = [[] for _ in range(n)]
    for u, v in t.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    if not all(seen):
        raise Disconnected("vertex graph is not connected")


def digon_fan(n: int) -> TilingMap:
    """The hosohedron map: n digons between two poles joined by n edges."""
    if n < 2:
        raise ValueError("a hosohedron needs at least 2 digons")
    # dart 2i runs pole 0 -> pole 1 along edge i, dart 2i+1 runs back;
    # face i lies between edges i and i+1
    origin = []
    face_next = [0] * (2 * n)
    edge_pair = [0] * (2 * n)
    face_of = [0] * (2 * n)
    faces = []
    for i in range(n):
        origin.extend([0, 1])
        edge_pair[2 * i] = 2 * i + 1
        edge_pair[2 * i + 1] = 2 * i
    for i in range(n):
        j = (i + 1) % n
        face_next[2 * i] = 2 * j + 1
        face_next[2 * j + 1] = 2 * i
        faces.append((2 * i, 2 * j + 1))
        face_of[2 * i] = i
        face_of[2 * j + 1] = i
    return TilingMap(
        origin=tuple(origin),
        face_next=tuple(face_next),
        edge_pair=tuple(edge_pair),
        face_of=tuple(face_of),
        faces=tuple(faces),
        family="hosohedron",
    )


# --------------------------------------------------------------------------
# validation
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    residual: Optional[float] = None
    detail: str = ""


@dataclass
class ValidationReport:
    name: str
    checks: dict = field(default_factory=dict)

    def add(self, key: str, passed: bool, residual: Optional[float] = None, detail: str = ""):
        self.checks[key] = CheckResult(bool(passed), residual, detail)

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> list:
        return [k for k, c in self.checks.items() if not c.passed]

    def summary(self) -> str:
        lines = []
        for k in sorted(self.checks):
            c = self.checks[k]
            res = "" if c.residual is None else f" residual={c.residual:.3e}"
            extra = f" ({c.detail})" if c.detail and not c.passed else ""
            lines.append(f"  {'pass' if c.passed else 'FAIL'}  {k}{res}{extra}")
        return "\n".join(lines)


@lru_cache(maxsize=8)
def _candidate_types(max_size: int) -> frozenset:
    return frozenset(vertexcomb.enumerate_candidate_types(max_size))


def _has_cut_vertex(t: TilingMap) -> bool:
    n = t.num_vertices
    if n <= 2:
        return False
    adj: list = [set() for _ in range(n)]
    for u, v in t.edges:
        adj[u].add(v)
        adj[v].add(u)
    for cut in range(n):
        start = 0 if cut != 0 else 1
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w != cut and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n - 1:
            return True
    return False


def validate(
    t: TilingMap,
    assign: AngleAssignment,
    tol: float = 1e-9,
    area_tol: float = 1e-8,
    expected: Optional[Census] = None,
    name: str = "",
) -> ValidationReport:
    """Run every structural and metric check on a tiling.

    Failures are report entries, not exceptions.  The degree bound, the
    vertex-type admissibility check and the convexity rule are skipped for
    the hosohedron/dihedron families, whose maps intentionally break them.
    """
    rep = ValidationReport(name=name or "tiling")
    exempt = t.family in ("hosohedron", "dihedron")

    c = census(t)
    v, e, f = c.v, c.e, c.f

    rep.add("euler", v - e + f == 2, float(v - e + f - 2))
    deg_sum = sum(t.degree(u) for u in range(v))
    rep.add("degree_sum", deg_sum == 2 * e, float(deg_sum - 2 * e))
    face_sum = sum(m * n for m, n in c.face_counts.items())
    rep.add("face_sum", face_sum == 2 * e, float(face_sum - 2 * e))

    try:
        worst = 0.0
        for u in range(v):
            s = sum(assign.angle(m) for m in t.vertex_face_sizes(u))
            worst = max(worst, abs(s - TWO_PI))
        rep.add("angle_sums", worst <= tol, worst)
    except vertexcomb.MissingAngle as exc:
        rep.add("angle_sums", False, detail=f"missing angle for size {exc.args[0]}")

    try:
        total = sum(
            n * polygon_area(m, assign.angle(m)) for m, n in c.face_counts.items()
        )
        rep.add("area", abs(total - 2 * TWO_PI) <= area_tol, abs(total - 2 * TWO_PI))
    except vertexcomb.MissingAngle as exc:
        rep.add("area", False, detail=f"missing angle for size {exc.args[0]}")

    degrees = {t.degree(u) for u in range(v)}
    rep.add(
        "degrees",
        exempt or degrees <= {3, 4, 5},
        detail=f"degrees {sorted(degrees)}",
    )

    if exempt:
        rep.add("vertex_feasibility", True, detail="family exemption")
    else:
        max_size = max(max(c.face_counts), 19)
        cands = _candidate_types(max_size)
        bad = [
            arr
            for arr in set(t.vertex_arrangements)
            if tuple(sorted(arr)) not in cands
        ]
        rep.add("vertex_feasibility", not bad, detail=f"inadmissible {bad}")

    try:
        if exempt:
            rep.add("convexity", True, detail="family exemption")
        else:
            wide = sum(
                n
                for m, n in c.face_counts.items()
                if assign.angle(m) >= math.pi - 1e-12
            )
            rep.add("convexity", wide <= 1, float(wide))
    except vertexcomb.MissingAngle:
        rep.add("convexity", False, detail="missing angle")

    comp = max(assign.max_companion_residual(), assign.max_edge_residual())
    rep.add("companion", comp <= tol, comp)

    rep.add("two_connected", not _has_cut_vertex(t))

    if expected is not None:
        same = (
            dict(expected.vertex_types) == dict(c.vertex_types)
            and dict(expected.face_counts) == dict(c.face_counts)
        )
        rep.add("census", same, detail="census mismatch" if not same else "")

    return rep


# --------------------------------------------------------------------------
# isomorphism and homogeneity
# --------------------------------------------------------------------------


def isomorphic(a: TilingMap, b: TilingMap) -> bool:
    """Face-size-preserving map isomorphism, allowing reflection."""
    if a._invariant_key != b._invariant_key:
        return False
    return a.canonical_form == b.canonical_form


def homogeneity(t: TilingMap) -> str:
    """Classify vertex homogeneity: 'strong', 'weak-only' or 'none'.

    Strong means every vertex has the same angle arrangement; weak-only
    means a single vertex type occurs but with at least two arrangements.
    """
    arrangements = set(t.vertex_arrangements)
    if len(arrangements) == 1:
        return "strong"
    types = {tuple(sorted(a)) for a in arrangements}
    return "weak-only" if len(types) == 1 else "none"
