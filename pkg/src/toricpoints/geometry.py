"""Exact half-plane intersection in the plane.

All coordinates are Fractions; there is no floating point anywhere.  A
half-plane is a pair (normal, offset) with normal a lattice vector, meaning
<x, normal> >= offset.  The regions arising from fans are always bounded
because the rays positively span the plane.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor
from typing import List, Sequence, Tuple

from .fan import LatticePoint

QPoint = Tuple[Fraction, Fraction]
HalfPlane = Tuple[LatticePoint, Fraction]


def contains(halfplanes: Sequence[HalfPlane], p: QPoint) -> bool:
    return all(n[0] * p[0] + n[1] * p[1] >= c for n, c in halfplanes)


def _line_intersection(h1: HalfPlane, h2: HalfPlane) -> QPoint | None:
    (a1, b1), c1 = h1
    (a2, b2), c2 = h2
    d = a1 * b2 - a2 * b1
    if d == 0:
        return None
    x = Fraction(c1 * b2 - c2 * b1, d)
    y = Fraction(a1 * c2 - a2 * c1, d)
    return (x, y)


def feasible_vertices(halfplanes: Sequence[HalfPlane]) -> List[QPoint]:
    """Vertices of the (bounded) intersection: pairwise boundary-line
    intersections that satisfy every constraint.  Empty list means the
    region has no vertex, which for a bounded region means it is empty."""
    verts: List[QPoint] = []
    m = len(halfplanes)
    for i in range(m):
        for j in range(i + 1, m):
            p = _line_intersection(halfplanes[i], halfplanes[j])
            if p is not None and contains(halfplanes, p) and p not in verts:
                verts.append(p)
    return verts


def hull_dimension(vertices: Sequence[QPoint]) -> int:
    """Affine dimension of the vertex set: -1 empty, 0 point, 1 segment, 2 polygon."""
    if not vertices:
        return -1
    if len(vertices) == 1:
        return 0
    p0 = vertices[0]
    direction = None
    for p in vertices[1:]:
        v = (p[0] - p0[0], p[1] - p0[1])
        if v == (Fraction(0), Fraction(0)):
            continue
        if direction is None:
            direction = v
        elif direction[0] * v[1] - direction[1] * v[0] != 0:
            return 2
    return 1 if direction is not None else 0


def lattice_points(
    halfplanes: Sequence[HalfPlane], vertices: Sequence[QPoint] | None = None
) -> List[LatticePoint]:
    """All lattice points in the region, by bounding-box enumeration.

    Deliberately brute force: the box test doubles as an independent oracle
    for anything cleverer downstream.  Points come out sorted (x, then y).
    """
    if vertices is None:
        vertices = feasible_vertices(halfplanes)
    if not vertices:
        return []
    xmin = min(floor(v[0]) for v in vertices)
    xmax = max(ceil(v[0]) for v in vertices)
    ymin = min(floor(v[1]) for v in vertices)
    ymax = max(ceil(v[1]) for v in vertices)
    pts = []
    for x in range(xmin, xmax + 1):
        for y in range(ymin, ymax + 1):
            if all(n[0] * x + n[1] * y >= c for n, c in halfplanes):
                pts.append((x, y))
    return pts
