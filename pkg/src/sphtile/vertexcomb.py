"""Vertex types of spherical tilings by regular polygons.

A vertex type is the multiset of face sizes meeting at a vertex,
represented as a sorted tuple.  Two constraints cut the candidate space
down to a finite list: the interior angle of a regular m-gon exceeds the
planar value (1 - 2/m)*pi, so the angle sum forces

    sum over entries of (1 - 2/m) < 2        (strictly),

and the same bound caps the vertex degree at 5.  The inequality is
evaluated exactly over the rationals so boundary cases (for example four
squares, which tile the plane but not the sphere) are excluded without
floating-point judgement calls.

An arrangement is the cyclic order of the sizes around the vertex,
canonicalised up to rotation and reflection.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

TWO_PI = 2.0 * math.pi

VertexType = tuple  # sorted tuple of face sizes
Arrangement = tuple  # canonical cyclic sequence of face sizes

MIN_DEGREE = 3
MAX_DEGREE = 5


class MissingAngle(KeyError):
    """An angle assignment lacks a face size needed for a computation."""


def angle_deficit_ok(entries: Sequence[int]) -> bool:
    """Exact test of the admissibility bound sum (1 - 2/m) < 2."""
    total = sum(Fraction(m - 2, m) for m in entries)
    return total < 2


def enumerate_candidate_types(max_size: int = 19) -> list[VertexType]:
    """All candidate vertex types over face sizes 3..max_size.

    Multisets of degree 3 to 5 passing the exact admissibility bound,
    as ascending tuples in lexicographic order.
    """
    if max_size < 3:
        raise ValueError(f"max_size must be >= 3, got {max_size}")
    out = []
    for degree in range(MIN_DEGREE, MAX_DEGREE + 1):
        for combo in itertools.combinations_with_replacement(
            range(3, max_size + 1), degree
        ):
            if angle_deficit_ok(combo):
                out.append(combo)
    out.sort()
    return out


def with_triangle(types: Iterable[VertexType]) -> list[VertexType]:
    return [t for t in types if 3 in t]


def triangle_free(types: Iterable[VertexType]) -> list[VertexType]:
    return [t for t in types if 3 not in t]


def _angle_map(assign) -> Mapping[int, float]:
    # accept either an AngleAssignment-like object or a plain mapping
    return getattr(assign, "angles", assign)


def remainder(partial: Sequence[int], assign) -> float:
    """2*pi minus the angles of the given partial multiset of face sizes.

    May be negative or zero, which signals that the partial vertex cannot
    be extended.
    """
    angles = _angle_map(assign)
    total = 0.0
    for m in partial:
        try:
            total += angles[m]
        except KeyError:
            raise MissingAngle(m) from None
    return TWO_PI - total


def canonical_arrangement(cycle: Sequence[int]) -> Arrangement:
    """Lexicographically minimal representative under rotation and reflection."""
    seq = tuple(cycle)
    n = len(seq)
    if n == 0:
        return seq
    best = None
    for candidate in (seq, seq[::-1]):
        for i in range(n):
            rot = candidate[i:] + candidate[:i]
            if best is None or rot < best:
                best = rot
    return best


def arrangements(t: Sequence[int]) -> list[Arrangement]:
    """Distinct cyclic arrangements of the multiset t, canonical order."""
    seen = set()
    for perm in itertools.permutations(sorted(t)):
        seen.add(canonical_arrangement(perm))
    return sorted(seen)


def feasible_types(assign, tol: float = 1e-9) -> list[VertexType]:
    """Candidate types over the assignment's sizes with angle sum 2*pi.

    Enumerates multisets of degree 3..5 drawn from the face sizes present
    in ``assign`` and keeps those whose angle sum is within ``tol`` of
    2*pi.
    """
    angles = _angle_map(assign)
    sizes = sorted(angles)
    out = []
    for degree in range(MIN_DEGREE, MAX_DEGREE + 1):
        for combo in itertools.combinations_with_replacement(sizes, degree):
            total = sum(angles[m] for m in combo)
            if abs(total - TWO_PI) <= tol:
                out.append(combo)
    out.sort()
    return out
