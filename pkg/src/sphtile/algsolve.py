"""Solving the angle systems of tilings by regular polygons.

Given a vertex type (a multiset of face sizes), the angles of a tiling
realising it must satisfy the angle sum 2*pi at the vertex together with
the pairwise companion relation of :mod:`sphtile.sphkernel` (all faces
share one edge length).  ``solve_vertex_system`` finds every solution of
that system by damped multistart Newton iteration on the cos/sin
formulation with unit-circle constraints.

The module also carries exact golden data for the hardest case, the
degree-4 type {3,4,4,5}: the reduced Groebner basis of its polynomial
system and the four closed-form candidate solutions, used as an
independent check of the Newton pipeline rather than as the solver.

``Polynomial`` implements exact rational univariate polynomials with
Sturm-sequence real root isolation, used both for the Groebner check and
for the snub-dodecahedron sextic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from . import vertexcomb
from .sphkernel import (
    TWO_PI,
    DomainError,
    NoSolution,
    companion_residual,
    edge_from_angle,
    planar_angle,
)

__all__ = [
    "AngleAssignment",
    "Polynomial",
    "isolate_roots",
    "solve_vertex_system",
    "solve_snub",
    "verify_groebner_candidates",
    "snub_dodecahedron_cos",
    "GroebnerReport",
    "GroebnerCandidate",
]


# --------------------------------------------------------------------------
# angle assignments
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class AngleAssignment:
    """Interior angle per face size, plus the common edge length.

    The pair determines the metric data of a tiling: every m-gon in an
    edge-to-edge tiling by regular polygons is congruent, so one angle per
    size suffices.
    """

    angles: Mapping[int, float]
    edge: float

    def __post_init__(self):
        object.__setattr__(self, "angles", MappingProxyType(dict(self.angles)))

    @classmethod
    def from_angles(cls, angles: Mapping[int, float]) -> "AngleAssignment":
        """Build an assignment, deriving the edge from the smallest size."""
        sizes = sorted(angles)
        if not sizes:
            raise ValueError("empty angle assignment")
        if sizes[0] == 2:
            return cls(angles, math.pi)
        return cls(angles, edge_from_angle(sizes[0], angles[sizes[0]]))

    @property
    def sizes(self) -> tuple:
        return tuple(sorted(self.angles))

    def angle(self, m: int) -> float:
        try:
            return self.angles[m]
        except KeyError:
            raise vertexcomb.MissingAngle(m) from None

    def with_angle(self, m: int, alpha: float) -> "AngleAssignment":
        new = dict(self.angles)
        new[m] = alpha
        return AngleAssignment(new, self.edge)

    def without_size(self, m: int) -> "AngleAssignment":
        new = {k: v for k, v in self.angles.items() if k != m}
        return AngleAssignment(new, self.edge)

    def max_companion_residual(self) -> float:
        worst = 0.0
        for m, n in itertools.combinations(self.sizes, 2):
            if m == 2 or n == 2:
                continue
            worst = max(worst, abs(companion_residual(m, self.angles[m], n, self.angles[n])))
        return worst

    def max_edge_residual(self) -> float:
        """Largest |cos(edge implied by a member) - cos(edge)|."""
        cx = math.cos(self.edge)
        worst = 0.0
        for m, alpha in self.angles.items():
            if m == 2:
                continue
            ca = math.cos(alpha)
            implied = (1.0 + ca + 2.0 * math.cos(TWO_PI / m)) / (1.0 - ca)
            worst = max(worst, abs(implied - cx))
        return worst

    def monotone_convex(self) -> bool:
        """Whether strictly convex members are angle-ordered by face size."""
        convex = [(m, a) for m, a in sorted(self.angles.items()) if a < math.pi - 1e-12 and m >= 3]
        return all(a < b for (_, a), (_, b) in zip(convex, convex[1:]))


# --------------------------------------------------------------------------
# exact univariate polynomials and root isolation
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial with exact rational coefficients, ascending."""

    coeffs: tuple

    @classmethod
    def from_coeffs(cls, seq: Sequence) -> "Polynomial":
        c = [Fraction(v) for v in seq]
        while c and c[-1] == 0:
            c.pop()
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def eval_exact(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial.from_coeffs(
            [i * c for i, c in enumerate(self.coeffs)][1:]
        )

    def _divmod(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.coeffs[-1]
        while len(rem) - 1 >= d and any(rem):
            k = len(rem) - 1 - d
            q = rem[-1] / lead
            quo[k] = q
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= q * c
            while rem and rem[-1] == 0:
                rem.pop()
            if not rem:
                break
        return Polynomial.from_coeffs(quo), Polynomial.from_coeffs(rem)

    def squarefree_part(self) -> "Polynomial":
        g = _poly_gcd(self, self.derivative())
        if g.degree <= 0:
            return self
        quo, _ = self._divmod(g)
        return quo


def _poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        _, r = a._divmod(b)
        a, b = b, r
    if a.is_zero():
        return a
    lead = a.coeffs[-1]
    return Polynomial.from_coeffs([c / lead for c in a.coeffs])


def _sturm_chain(p: Polynomial) -> list:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        _, r = chain[-2]._divmod(chain[-1])
        if r.is_zero():
            break
        chain.append(Polynomial.from_coeffs([-c for c in r.coeffs]))
    return [q for q in chain if not q.is_zero()]


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q.eval_exact(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def isolate_roots(p: Polynomial, lo: float, hi: float) -> list[float]:
    """All distinct real roots of p in [lo, hi], each to ~1e-14.

    Sturm-sequence isolation on the squarefree part followed by bisection
    and a short Newton polish.  Multiple roots are reported once.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if lo > hi:
        raise ValueError("empty interval")
    g = p.squarefree_part()
    if g.degree == 0:
        return []
    a0, b0 = Fraction(lo), Fraction(hi)
    chain = _sturm_chain(g)
    roots = []
    if g.eval_exact(a0) == 0:
        roots.append(float(a0))
    if b0 != a0 and g.eval_exact(b0) == 0:
        roots.append(float(b0))

    def count(a: Fraction, b: Fraction) -> int:
        # number of roots in the half-open interval (a, b]
        n = _sign_variations(chain, a) - _sign_variations(chain, b)
        if g.eval_exact(b) == 0:
            n -= 1  # endpoint roots are collected separately
        return n

    stack = [(a0, b0)]
    isolated = []
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1 and (b - a) < Fraction(1, 1 << 16):
            isolated.append((a, b))
            continue
        mid = (a + b) / 2
        if g.eval_exact(mid) == 0:
            roots.append(float(mid))
            # exclude a gap around the exact root, shrinking it until no
            # neighbouring root is swallowed (root-count conservation)
            eps = (b - a) / (1 << 12)
            for _ in range(8):
                if count(a, mid - eps) + count(mid + eps, b) + 1 == n:
                    break
                eps /= 1 << 10
            stack.append((a, mid - eps))
            stack.append((mid + eps, b))
        else:
            stack.append((a, mid))
            stack.append((mid, b))

    for a, b in isolated:
        # exact bisection: float evaluation cannot separate close roots
        ga = g.eval_exact(a)
        for _ in range(80):
            if b - a < Fraction(1, 10**17):
                break
            mid = (a + b) / 2
            gm = g.eval_exact(mid)
            if gm == 0:
                a = b = mid
                break
            if (ga < 0) != (gm < 0):
                b = mid
            else:
                a, ga = mid, gm
        roots.append(float((a + b) / 2))

    roots.sort()
    out = []
    for r in roots:
        if not out or abs(r - out[-1]) > 1e-12:
            if lo - 1e-12 <= r <= hi + 1e-12:
                out.append(min(max(r, lo), hi))
    return out


# --------------------------------------------------------------------------
# vertex-type angle systems
# --------------------------------------------------------------------------


def _polish_angles(sizes, counts, alphas, iterations=60):
    """Square Newton in angle space: angle sum + shared-edge consistency.

    Returns None if the iteration leaves the valid angle domain.
    """
    k = len(sizes)
    cm = [math.cos(TWO_PI / m) for m in sizes]
    a = list(alphas)

    def implied_cos(i):
        ca = math.cos(a[i])
        return (1.0 + ca + 2.0 * cm[i]) / (1.0 - ca)

    def d_implied(i):
        ca, sa = math.cos(a[i]), math.sin(a[i])
        return -sa * (2.0 + 2.0 * cm[i]) / (1.0 - ca) ** 2

    for _ in range(iterations):
        if any(not (1e-9 < v < TWO_PI - 1e-9) or math.cos(v) > 1.0 - 1e-12 for v in a):
            return None
        f = [sum(c * x for c, x in zip(counts, a)) - TWO_PI]
        for i in range(1, k):
            f.append(implied_cos(i) - implied_cos(0))
        if max(abs(v) for v in f) < 1e-15:
            break
        jac = np.zeros((k, k))
        jac[0, :] = counts
        for i in range(1, k):
            jac[i, i] = d_implied(i)
            jac[i, 0] = -d_implied(0)
        try:
            step = np.linalg.solve(jac, np.array(f))
        except np.linalg.LinAlgError:
            break
        if not np.all(np.isfinite(step)):
            return None
        a = [ai - si for ai, si in zip(a, step)]
    return a


def solve_vertex_system(
    t: Sequence[int],
    *,
    grid_points: int = 16,
    max_iter: int = 200,
    dedup_tol: float = 1e-9,
) -> list[AngleAssignment]:
    """All angle assignments realising the vertex type ``t``.

    Solves the angle-sum equation together with every pairwise companion
    relation by damped multistart Newton on (cos a_i, sin a_i) with
    unit-circle constraints, then filters to angles in (0, 2*pi) with
    angle sum exactly 2*pi, deduplicates and polishes.  Returns an empty
    list when no solution exists.  Deterministic for identical inputs.
    """
    entries = tuple(sorted(int(m) for m in t))
    if len(entries) < 3 or len(entries) > 5 or min(entries) < 3:
        raise DomainError(f"vertex type must have 3-5 entries of size >= 3: {entries}")
    if not vertexcomb.angle_deficit_ok(entries):
        raise DomainError(f"vertex type {entries} fails the admissibility bound")

    sizes = sorted(set(entries))
    counts = [entries.count(m) for m in sizes]
    k = len(sizes)
    degree = len(entries)

    if k == 1:
        alpha = TWO_PI / degree
        if alpha <= planar_angle(sizes[0]):
            return []
        return [AngleAssignment.from_angles({sizes[0]: alpha})]

    cm = np.array([math.cos(TWO_PI / m) for m in sizes])
    pairs = list(itertools.combinations(range(k), 2))
    n_eq = k + len(pairs) + 2

    def residuals(v):
        x, y = v[:, :k], v[:, k:]
        out = np.empty((v.shape[0], n_eq))
        out[:, :k] = x * x + y * y - 1.0
        for col, (i, j) in enumerate(pairs):
            ai = 1.0 + x[:, i] + 2.0 * cm[i]
            aj = 1.0 + x[:, j] + 2.0 * cm[j]
            out[:, k + col] = (1.0 - x[:, j]) * ai - (1.0 - x[:, i]) * aj
        z = x + 1j * y
        prod = np.ones(v.shape[0], dtype=complex)
        for i in range(k):
            prod *= z[:, i] ** counts[i]
        out[:, -2] = prod.real - 1.0
        out[:, -1] = prod.imag
        return out

    def jacobian(v):
        n = v.shape[0]
        x, y = v[:, :k], v[:, k:]
        jac = np.zeros((n, n_eq, 2 * k))
        for i in range(k):
            jac[:, i, i] = 2.0 * x[:, i]
            jac[:, i, k + i] = 2.0 * y[:, i]
        for col, (i, j) in enumerate(pairs):
            ai = 1.0 + x[:, i] + 2.0 * cm[i]
            aj = 1.0 + x[:, j] + 2.0 * cm[j]
            jac[:, k + col, i] = (1.0 - x[:, j]) + aj
            jac[:, k + col, j] = -ai - (1.0 - x[:, i])
        z = x + 1j * y
        zsafe = np.where(np.abs(z) < 1e-9, 1e-9, z)
        prod = np.ones(n, dtype=complex)
        for i in range(k):
            prod *= z[:, i] ** counts[i]
        for i in range(k):
            dzi = counts[i] * prod / zsafe[:, i]
            jac[:, -2, i] = dzi.real
            jac[:, -1, i] = dzi.imag
            jac[:, -2, k + i] = (1j * dzi).real
            jac[:, -1, k + i] = (1j * dzi).imag
        return jac

    axes = [
        np.linspace(planar_angle(m), TWO_PI, grid_points + 2)[1:-1] for m in sizes
    ]
    grids = np.meshgrid(*axes, indexing="ij")
    alpha0 = np.stack([g.ravel() for g in grids], axis=1)
    v = np.concatenate([np.cos(alpha0), np.sin(alpha0)], axis=1)

    f = residuals(v)
    norm = np.max(np.abs(f), axis=1)
    alive = np.ones(v.shape[0], dtype=bool)
    lam = 1e-12
    for _ in range(max_iter):
        act = alive & (norm > 1e-13)
        idx = np.nonzero(act)[0]
        if idx.size == 0:
            break
        jac = jacobian(v[idx])
        jt = np.transpose(jac, (0, 2, 1))
        h = jt @ jac + lam * np.eye(2 * k)
        grad = jt @ f[idx][:, :, None]
        try:
            step = -np.linalg.solve(h, grad)[:, :, 0]
        except np.linalg.LinAlgError:
            step = -np.linalg.solve(h + 1e-8 * np.eye(2 * k), grad)[:, :, 0]
        remaining = idx.copy()
        factor = 1.0
        improved_any = np.zeros(idx.size, dtype=bool)
        local = np.arange(idx.size)
        for _ in range(9):
            trial = v[remaining] + factor * step[local]
            trial_f = residuals(trial)
            trial_norm = np.max(np.abs(trial_f), axis=1)
            better = trial_norm < norm[remaining]
            take = np.nonzero(better)[0]
            rows = remaining[take]
            v[rows] = trial[take]
            f[rows] = trial_f[take]
            norm[rows] = trial_norm[take]
            improved_any[local[take]] = True
            keep = ~better
            remaining = remaining[keep]
            local = local[keep]
            if remaining.size == 0:
                break
            factor *= 0.5
        alive[idx[~improved_any]] = False

    good = norm < 1e-11
    sols = []
    for row in np.nonzero(good)[0]:
        x, y = v[row, :k], v[row, k:]
        alphas = np.mod(np.arctan2(y, x), TWO_PI)
        if np.any(alphas < 1e-9) or np.any(alphas > TWO_PI - 1e-9):
            continue
        if abs(float(np.dot(counts, alphas)) - TWO_PI) > 1e-6:
            continue
        sols.append(tuple(alphas))

    sols.sort()
    unique = []
    for s in sols:
        if not unique or max(abs(a - b) for a, b in zip(s, unique[-1])) > dedup_tol:
            unique.append(s)

    out = []
    for s in unique:
        polished = _polish_angles(sizes, counts, s)
        if polished is None or any(not (1e-9 < a < TWO_PI - 1e-9) for a in polished):
            continue
        assign = AngleAssignment.from_angles(dict(zip(sizes, polished)))
        if assign.max_companion_residual() > 1e-9:
            continue
        if abs(sum(c * a for c, a in zip(counts, polished)) - TWO_PI) > 1e-9:
            continue
        out.append(assign)
    out.sort(key=lambda a: tuple(a.angles[m] for m in sizes))
    return out


def solve_snub(m: int) -> AngleAssignment:
    """Angles of the degree-5 snub type with four triangles and one m-gon.

    Solves 4*a3 + a_m = 2*pi together with the companion relation, for
    m = 4 (snub cube) or m = 5 (snub dodecahedron).
    """
    if m not in (4, 5):
        raise DomainError(f"snub type requires m in {{4, 5}}, got {m}")
    lo = math.pi / 3.0 + 1e-9
    hi = (TWO_PI - planar_angle(m)) / 4.0 - 1e-9

    def f(a3: float) -> float:
        return companion_residual(3, a3, m, TWO_PI - 4.0 * a3)

    a, fa = lo, f(lo)
    bracket = None
    steps = 2000
    for i in range(1, steps + 1):
        b = lo + (hi - lo) * i / steps
        fb = f(b)
        if fa * fb <= 0.0:
            bracket = (a, b)
            break
        a, fa = b, fb
    if bracket is None:
        raise NoSolution(f"no snub solution bracket for m={m}")
    a, b = bracket
    for _ in range(200):
        mid = 0.5 * (a + b)
        if f(a) * f(mid) <= 0.0:
            b = mid
        else:
            a = mid
    a3 = 0.5 * (a + b)
    return AngleAssignment.from_angles({3: a3, m: TWO_PI - 4.0 * a3})


# --------------------------------------------------------------------------
# golden data for the {3,4,4,5} system
# --------------------------------------------------------------------------

# Variables of the polynomial system, in order: y3, y4, y5, x3, x4, x5
# with x_i = cos(a_i), y_i = sin(a_i).  Monomials are exponent tuples.
_V = {"y3": 0, "y4": 1, "y5": 2, "x3": 3, "x4": 4, "x5": 5}


def _mono(coeff, **powers):
    expo = [0] * 6
    for name, e in powers.items():
        expo[_V[name]] = e
    return tuple(expo), coeff


GROEBNER_BASIS_3445 = tuple(
    dict(monos)
    for monos in (
        # univariate in y4
        [_mono(1600, y4=11), _mono(-2960, y4=9), _mono(1484, y4=7), _mono(-123, y4=5)],
        [
            _mono(2400, y4=10),
            _mono(-3840, y4=8),
            _mono(1326, y4=6),
            _mono(-160, y4=5, y5=1),
            _mono(153, y4=4),
            _mono(120, y4=3, y5=1),
        ],
        [
            _mono(-24000, y4=10),
            _mono(42000, y4=8),
            _mono(-18020, y4=6),
            _mono(-1, y4=4),
            _mono(-4, y4=2),
            _mono(-8, x4=1),
            _mono(8),
        ],
        [
            _mono(-24000, y4=10),
            _mono(42000, y4=8),
            _mono(-18020, y4=6),
            _mono(-1, y4=4),
            _mono(-4, y4=2),
            _mono(-16, x3=1),
            _mono(16),
        ],
        [
            _mono(-4800, y4=10),
            _mono(8880, y4=8),
            _mono(-4452, y4=6),
            _mono(-31, y4=4),
            _mono(140, y4=2),
            _mono(160, y4=1, y5=1),
            _mono(-80, x5=1),
            _mono(80),
        ],
        [
            _mono(-800, y4=9),
            _mono(1440, y4=7),
            _mono(-642, y4=5),
            _mono(-16, y4=4, y5=1),
            _mono(5, y4=3),
            _mono(4, y4=2, y5=1),
            _mono(2, y5=1),
            _mono(4, y4=1),
            _mono(2, y3=1),
        ],
        [
            _mono(-4800, y4=10),
            _mono(8880, y4=8),
            _mono(-3652, y4=6),
            _mono(-631, y4=4),
            _mono(-480, y4=3, y5=1),
            _mono(80, y5=2),
            _mono(280, y4=2),
            _mono(320, y4=1, y5=1),
        ],
    )
)

GROEBNER_UNIVARIATE_Y4 = Polynomial.from_coeffs(
    [0, 0, 0, 0, 0, -123, 0, 1484, 0, -2960, 0, 1600]
)

_S5 = math.sqrt(5.0)

#: the four candidate (cos a3, cos a4, cos a5) triples of the {3,4,4,5} system
REFERENCE_CANDIDATES_3445 = (
    ((5.0 - 2.0 * _S5) / 20.0, -(5.0 + 2.0 * _S5) / 10.0, (5.0 + 9.0 * _S5) / 40.0),
    ((5.0 + 2.0 * _S5) / 20.0, (2.0 * _S5 - 5.0) / 10.0, (5.0 - 9.0 * _S5) / 40.0),
    (0.25, -0.5, -(3.0 * _S5 + 1.0) / 8.0),
    (0.25, -0.5, (3.0 * _S5 - 1.0) / 8.0),
)

#: snub-dodecahedron sextic: cos(a3) is one of its roots
SNUB_DODECAHEDRON_SEXTIC = Polynomial.from_coeffs([1, 0, -24, -24, 64, 128, 64])


def snub_dodecahedron_cos() -> float:
    """The sextic root in (0, 1) that solves the snub system for m = 5."""
    best, best_res = None, math.inf
    for r in isolate_roots(SNUB_DODECAHEDRON_SEXTIC, 0.0, 1.0):
        a3 = math.acos(r)
        am = TWO_PI - 4.0 * a3
        if not 0.0 < am < TWO_PI:
            continue
        res = abs(companion_residual(3, a3, 5, am))
        if res < best_res:
            best, best_res = r, res
    if best is None or best_res > 1e-9:
        raise NoSolution("no sextic root matches the snub system")
    return best


def _eval_monomials(poly: Mapping, values: dict) -> float:
    total = 0.0
    for expo, coeff in poly.items():
        term = float(coeff)
        for var, e in zip(range(6), expo):
            if e:
                term *= values[var] ** e
        total += term
    return total


def _coeffs_in_var(poly: Mapping, var: int, values: dict) -> list[float]:
    """Collapse a multivariate polynomial to coefficients in one variable."""
    out: dict[int, float] = {}
    for expo, coeff in poly.items():
        term = float(coeff)
        for v, e in zip(range(6), expo):
            if v == var or not e:
                continue
            term *= values[v] ** e
        out[expo[var]] = out.get(expo[var], 0.0) + term
    top = max(out) if out else 0
    return [out.get(i, 0.0) for i in range(top + 1)]


@dataclass(frozen=True)
class GroebnerCandidate:
    x3: float
    x4: float
    x5: float
    y3: float
    y4: float
    y5: float
    angles: tuple
    ordered_ok: bool
    sum_ok: bool

    @property
    def selected(self) -> bool:
        return self.ordered_ok and self.sum_ok


@dataclass(frozen=True)
class GroebnerReport:
    candidates: tuple
    surviving: tuple
    y4_roots: tuple
    basis_residual_max: float


def verify_groebner_candidates() -> GroebnerReport:
    """Reconstruct the {3,4,4,5} candidates from the embedded basis.

    Back-substitutes through the reduced basis starting from the roots of
    its univariate member, checks every basis polynomial vanishes at each
    candidate, matches the candidates against the exact reference triples,
    and applies the two admissibility filters (angle ordering and angle
    sum).  Exactly one candidate must survive.
    """
    basis = GROEBNER_BASIS_3445
    y4_roots = tuple(isolate_roots(GROEBNER_UNIVARIATE_Y4, 1e-9, 1.0 - 1e-12))

    raw = []
    for y4 in y4_roots:
        vals = {_V["y4"]: y4}
        lin = _coeffs_in_var(basis[1], _V["y5"], vals)
        if len(lin) >= 2 and abs(lin[1]) > 1e-9:
            y5s = [-lin[0] / lin[1]]
        else:
            quad = _coeffs_in_var(basis[6], _V["y5"], vals)
            disc = quad[1] * quad[1] - 4.0 * quad[2] * quad[0]
            disc = max(disc, 0.0)
            y5s = sorted(
                [(-quad[1] - math.sqrt(disc)) / (2.0 * quad[2]),
                 (-quad[1] + math.sqrt(disc)) / (2.0 * quad[2])]
            )
        for y5 in y5s:
            vals2 = dict(vals)
            vals2[_V["y5"]] = y5
            for poly, var in ((basis[2], _V["x4"]), (basis[3], _V["x3"]), (basis[4], _V["x5"]), (basis[5], _V["y3"])):
                lin = _coeffs_in_var(poly, var, vals2)
                vals2[var] = -lin[0] / lin[1]
            raw.append(vals2)

    worst = 0.0
    for vals in raw:
        for poly in basis:
            worst = max(worst, abs(_eval_monomials(poly, vals)))
    if worst > 1e-7:
        raise RuntimeError(f"basis residual {worst} too large at a candidate")

    # order candidates to match the reference rows
    ordered = []
    used = set()
    for ref in REFERENCE_CANDIDATES_3445:
        best_i, best_d = None, math.inf
        for i, vals in enumerate(raw):
            if i in used:
                continue
            d = max(
                abs(vals[_V["x3"]] - ref[0]),
                abs(vals[_V["x4"]] - ref[1]),
                abs(vals[_V["x5"]] - ref[2]),
            )
            if d < best_d:
                best_i, best_d = i, d
        if best_i is None or best_d > 1e-9:
            raise RuntimeError("reconstructed candidates do not match reference triples")
        used.add(best_i)
        ordered.append(raw[best_i])

    candidates = []
    for vals in ordered:
        a3 = math.atan2(vals[_V["y3"]], vals[_V["x3"]]) % TWO_PI
        a4 = math.atan2(vals[_V["y4"]], vals[_V["x4"]]) % TWO_PI
        a5 = math.atan2(vals[_V["y5"]], vals[_V["x5"]]) % TWO_PI
        candidates.append(
            GroebnerCandidate(
                x3=vals[_V["x3"]],
                x4=vals[_V["x4"]],
                x5=vals[_V["x5"]],
                y3=vals[_V["y3"]],
                y4=vals[_V["y4"]],
                y5=vals[_V["y5"]],
                angles=(a3, a4, a5),
                ordered_ok=a3 < a4 < a5,
                sum_ok=abs(a3 + 2.0 * a4 + a5 - TWO_PI) < 1e-8,
            )
        )

    surviving = tuple(i for i, c in enumerate(candidates) if c.selected)
    if len(surviving) != 1:
        raise RuntimeError(f"expected exactly one surviving candidate, got {surviving}")
    return GroebnerReport(
        candidates=tuple(candidates),
        surviving=surviving,
        y4_roots=y4_roots,
        basis_residual_max=worst,
    )
