"""Spherical trigonometry of regular polygons on the unit sphere.

A regular spherical m-gon is equilateral with all interior angles equal.
Triangulating it from its centre into m isosceles triangles (base = the
edge x, legs = the circumradius r, apex angle 2*pi/m) and applying the
spherical cosine laws gives three identities that tie together the face
size m, the interior angle alpha, the edge length x and the circumradius
r:

    (1 + cos x)(1 + cos alpha) / 2  =  cos x - cos(2*pi/m)
    cos r  =  cot(alpha/2) * cot(pi/m)
    cos x  =  (1 + cos alpha + 2*cos(2*pi/m)) / (1 - cos alpha)

Two regular polygons (an m-gon and an n-gon) share an edge length exactly
when

    (1 - cos a_n)(1 + cos a_m + 2*cos(2*pi/m))
        = (1 - cos a_m)(1 + cos a_n + 2*cos(2*pi/n)),

which is linear in either cosine; this module calls it the companion
relation.  All identities involve the angle only through its cosine, so an
angle alpha and its reflex complement 2*pi - alpha (the same polygon seen
from the other side) always satisfy them together.  Conversion functions
return the convex branch; callers model concave faces with the explicit
complement.

Angles are plain floats in radians.  Digons (m = 2) degenerate most of the
identities and are supported only through ``PolygonSpec.digon``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi

#: default residual tolerance for the companion relation and validation
RESIDUAL_TOL = 1e-9


class DomainError(ValueError):
    """Raised when an input lies outside the admissible geometric range."""


class NoSolution(RuntimeError):
    """Raised when a bracketing search finds no root."""


def planar_angle(m: int) -> float:
    """Interior angle of a planar regular m-gon, the x -> 0 limit."""
    return (1.0 - 2.0 / m) * math.pi


def _check_size(m: int) -> None:
    if int(m) != m or m < 3:
        raise DomainError(f"face size must be an integer >= 3, got {m!r}")


def angle_from_edge(m: int, x: float) -> float:
    """Interior angle of the regular m-gon with geodesic edge length x.

    Returns the convex solution in ((1 - 2/m)*pi, pi]; the concave
    companion is its reflex complement 2*pi - alpha.
    """
    _check_size(m)
    if not 0.0 < x < math.pi:
        raise DomainError(f"edge length must lie in (0, pi), got {x}")
    cm = math.cos(TWO_PI / m)
    cx = math.cos(x)
    # x = 2*pi/m (cx = cm) is the hemisphere boundary, angle pi
    if cx < cm - 1e-12:
        raise DomainError(
            f"no spherical {m}-gon with edge {x}: need x <= 2*pi/{m}"
        )
    ca = 2.0 * max(cx - cm, 0.0) / (1.0 + cx) - 1.0
    return math.acos(max(-1.0, min(1.0, ca)))


def edge_from_angle(m: int, alpha: float) -> float:
    """Geodesic edge length of the regular m-gon with interior angle alpha."""
    _check_size(m)
    if not 0.0 < alpha < TWO_PI:
        raise DomainError(f"angle must lie in (0, 2*pi), got {alpha}")
    cm = math.cos(TWO_PI / m)
    ca = math.cos(alpha)
    cx = (1.0 + ca + 2.0 * cm) / (1.0 - ca)
    if cx >= 1.0 - 1e-15:
        raise DomainError(f"angle {alpha} at or below the planar limit for m={m}")
    if cx < -1.0:
        if cx < -1.0 - 1e-12:
            raise DomainError(f"no spherical {m}-gon with angle {alpha}")
        cx = -1.0
    return math.acos(cx)


def circumradius(m: int, alpha: float) -> float:
    """Geodesic distance from the centre of a regular m-gon to a vertex.

    Equal to pi/2 exactly when alpha = pi (the hemisphere case); larger
    for concave polygons.
    """
    _check_size(m)
    if not 0.0 < alpha < TWO_PI:
        raise DomainError(f"angle must lie in (0, 2*pi), got {alpha}")
    cr = (math.cos(alpha / 2.0) / math.sin(alpha / 2.0)) / math.tan(math.pi / m)
    if abs(cr) > 1.0:
        if abs(cr) > 1.0 + 1e-12:
            raise DomainError(f"angle {alpha} out of range for m={m}")
        cr = math.copysign(1.0, cr)
    return math.acos(cr)


def polygon_area(m: int, alpha: float) -> float:
    """Spherical excess area m*alpha - (m - 2)*pi; valid for m >= 2."""
    if int(m) != m or m < 2:
        raise DomainError(f"face size must be an integer >= 2, got {m!r}")
    return m * alpha - (m - 2) * math.pi


def eq_edge_angle_residual(m: int, alpha: float, x: float) -> float:
    """Residual of (1+cos x)(1+cos alpha)/2 - (cos x - cos(2*pi/m))."""
    cx = math.cos(x)
    return 0.5 * (1.0 + cx) * (1.0 + math.cos(alpha)) - (cx - math.cos(TWO_PI / m))


def companion_residual(m: int, alpha_m: float, n: float, alpha_n: float) -> float:
    """Residual of the companion relation between an m-gon and an n-gon.

    Zero (within tolerance) exactly when the two polygons have the same
    edge length.  ``n`` may be a non-integral real; that reading is what
    ``solve_companion_size`` inverts.
    """
    cam = math.cos(alpha_m)
    can = math.cos(alpha_n)
    return (1.0 - can) * (1.0 + cam + 2.0 * math.cos(TWO_PI / m)) - (
        1.0 - cam
    ) * (1.0 + can + 2.0 * math.cos(TWO_PI / n))


def solve_companion_angle(m: int, alpha_m: float, n: int) -> list[float]:
    """All angles of a regular n-gon sharing the m-gon's edge length.

    The companion relation is linear in cos(alpha_n), so there is at most
    one cosine; the result is the convex angle together with its reflex
    complement (deduplicated when they coincide at pi), or an empty list
    when the cosine falls outside [-1, 1].
    """
    _check_size(m)
    _check_size(n)
    if not 0.0 < alpha_m < TWO_PI:
        raise DomainError(f"angle must lie in (0, 2*pi), got {alpha_m}")
    cam = math.cos(alpha_m)
    a_side = 1.0 + cam + 2.0 * math.cos(TWO_PI / m)
    b_side = 1.0 - cam
    denom = 2.0 + 2.0 * math.cos(TWO_PI / m)
    can = (a_side - b_side - 2.0 * b_side * math.cos(TWO_PI / n)) / denom
    if abs(can) > 1.0 + 1e-12:
        return []
    # acos is ill-conditioned near +/-1, so treat the boundaries explicitly:
    # cos = 1 is the degenerate angle 0, cos = -1 the single solution pi.
    if can >= 1.0 - 1e-13:
        return []
    if can <= -1.0 + 1e-13:
        return [math.pi]
    base = math.acos(can)
    return [base, TWO_PI - base]


def solve_companion_size(
    m: int,
    alpha_m: float,
    alpha_target: float,
    lo: float = 3.0,
    hi: float = 64.0,
    scan_step: float = 0.25,
) -> float:
    """Real face size n whose companion of the m-gon has angle alpha_target.

    The residual is monotone in n (linear in cos(2*pi/n)), so a coarse
    sign-bracket scan followed by bisection finds the unique root.  Raises
    ``NoSolution`` when no sign change occurs on [lo, hi].
    """
    _check_size(m)

    def f(n: float) -> float:
        return companion_residual(m, alpha_m, n, alpha_target)

    a = lo
    fa = f(a)
    if fa == 0.0:
        return a
    bracket = None
    while a < hi:
        b = min(a + scan_step, hi)
        fb = f(b)
        if fb == 0.0:
            return b
        if fa * fb < 0.0:
            bracket = (a, b)
            break
        a, fa = b, fb
    if bracket is None:
        raise NoSolution(
            f"companion size: no sign change on [{lo}, {hi}] for target {alpha_target}"
        )
    a, b = bracket
    for _ in range(200):
        mid = 0.5 * (a + b)
        fm = f(mid)
        if fm == 0.0 or (b - a) < 1e-14:
            return mid
        if f(a) * fm < 0.0:
            b = mid
        else:
            a = mid
    return 0.5 * (a + b)


@dataclass(frozen=True)
class PolygonSpec:
    """A regular spherical polygon: size, angle, edge and circumradius."""

    m: int
    alpha: float
    edge: float
    radius: float

    def __post_init__(self):
        if self.m == 2:
            return
        res = eq_edge_angle_residual(self.m, self.alpha, self.edge)
        if abs(res) > RESIDUAL_TOL:
            raise DomainError(
                f"inconsistent {self.m}-gon data: edge/angle residual {res}"
            )

    @property
    def convex(self) -> bool:
        return self.alpha <= math.pi + 1e-15

    @property
    def strictly_convex(self) -> bool:
        return self.alpha < math.pi - 1e-15

    @property
    def hemisphere(self) -> bool:
        return abs(self.alpha - math.pi) <= 1e-12

    @property
    def area(self) -> float:
        return polygon_area(self.m, self.alpha)

    @classmethod
    def from_angle(cls, m: int, alpha: float) -> "PolygonSpec":
        x = edge_from_angle(m, alpha)
        return cls(m, alpha, x, circumradius(m, alpha))

    @classmethod
    def from_edge(cls, m: int, x: float) -> "PolygonSpec":
        alpha = angle_from_edge(m, x)
        return cls(m, alpha, x, circumradius(m, alpha))

    @classmethod
    def digon(cls, alpha: float) -> "PolygonSpec":
        """Digon with the given angle: edge pi, circumradius pi/2."""
        if not 0.0 < alpha < TWO_PI:
            raise DomainError(f"digon angle must lie in (0, 2*pi), got {alpha}")
        return cls(2, alpha, math.pi, math.pi / 2.0)
