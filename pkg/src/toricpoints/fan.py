"""Smooth complete toric surface fans in the rank-2 lattice.

A surface is described by its cyclically ordered primitive rays u_1,...,u_n
(counterclockwise).  Smoothness and completeness together amount to
det(u_i, u_{i+1}) = +1 for every consecutive pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence, Tuple

from .errors import (
    DuplicateRay,
    InputError,
    InternalInconsistency,
    NonPrimitiveRay,
    NotSmoothOrNotComplete,
)

LatticePoint = Tuple[int, int]


def dot(m: LatticePoint, u: LatticePoint) -> int:
    return m[0] * u[0] + m[1] * u[1]


def det(a: LatticePoint, b: LatticePoint) -> int:
    return a[0] * b[1] - a[1] * b[0]


@dataclass(frozen=True)
class ToricSurfaceFan:
    """Validated fan of a smooth complete toric surface.

    Construct through :func:`build_fan` or :func:`builtin_surface`; direct
    instantiation skips validation.  Immutable, safe to share.
    """

    rays: Tuple[LatticePoint, ...]
    name: Optional[str] = None

    @property
    def n(self) -> int:
        return len(self.rays)

    def ray(self, i: int) -> LatticePoint:
        return self.rays[i % self.n]

    def same_surface(self, other: "ToricSurfaceFan") -> bool:
        return self.rays == other.rays


def _winding_number(rays: Sequence[LatticePoint]) -> int:
    # Count crossings of the positive x-axis direction e = (1,0).  Each CCW
    # step spans an angle < pi, so e lies in [u_i, u_{i+1}) iff u_i sits on
    # the positive x-axis, or u_i is strictly below and u_{i+1} strictly
    # above the axis.
    n = len(rays)
    crossings = 0
    for i in range(n):
        a = rays[i]
        b = rays[(i + 1) % n]
        if a[1] == 0 and a[0] > 0:
            crossings += 1
        elif a[1] < 0 and b[1] > 0:
            crossings += 1
    return crossings


def build_fan(rays: Sequence[LatticePoint], name: Optional[str] = None) -> ToricSurfaceFan:
    """Validate rays and build the fan.

    Rays must be given in counterclockwise cyclic order; the order is kept
    as-is so prime divisor indices stay stable.
    """
    rays = tuple((int(x), int(y)) for x, y in rays)
    n = len(rays)
    if n < 3:
        raise NotSmoothOrNotComplete(f"need at least 3 rays, got {n}")
    for u in rays:
        if gcd(abs(u[0]), abs(u[1])) != 1:
            raise NonPrimitiveRay(f"ray {u} is not primitive")
    if len(set(rays)) != n:
        raise DuplicateRay("fan contains a repeated ray")
    for i in range(n):
        d = det(rays[i], rays[(i + 1) % n])
        if d != 1:
            raise NotSmoothOrNotComplete(
                f"det(u_{i}, u_{(i + 1) % n}) = {d} != 1 for rays "
                f"{rays[i]}, {rays[(i + 1) % n]}"
            )
    # All consecutive dets being +1 forces a single counterclockwise loop;
    # re-check the winding as a redundant validation.
    if _winding_number(rays) != 1:
        raise InternalInconsistency("rays do not wind exactly once around the origin")
    return ToricSurfaceFan(rays=rays, name=name)


def p2() -> ToricSurfaceFan:
    return build_fan([(1, 0), (0, 1), (-1, -1)], name="P2")


def hirzebruch(m: int) -> ToricSurfaceFan:
    if m < 0:
        raise InputError(f"Hirzebruch parameter must be >= 0, got {m}")
    return build_fan([(1, 0), (0, 1), (-1, m), (0, -1)], name=f"F{m}")


def p1xp1() -> ToricSurfaceFan:
    fan = hirzebruch(0)
    return ToricSurfaceFan(rays=fan.rays, name="P1xP1")


def builtin_surface(name: str, m: Optional[int] = None) -> ToricSurfaceFan:
    """Look up a builtin surface by name: P2, P1xP1, hirzebruch (needs m) or F<m>."""
    key = name.strip().lower()
    if key == "p2":
        return p2()
    if key == "p1xp1":
        return p1xp1()
    if key == "hirzebruch":
        if m is None:
            raise InputError("hirzebruch surface needs the parameter m")
        return hirzebruch(m)
    if key.startswith("f") and key[1:].isdigit():
        return hirzebruch(int(key[1:]))
    raise InputError(f"unknown builtin surface {name!r}")


@lru_cache(maxsize=None)
def prime_self_intersections(fan: ToricSurfaceFan) -> Tuple[int, ...]:
    """Self-intersection numbers (D_1^2, ..., D_n^2).

    On a smooth complete toric surface u_{i-1} + u_{i+1} = b_i u_i for a
    unique integer b_i, and D_i^2 = -b_i.
    """
    out = []
    for i in range(fan.n):
        s = (
            fan.ray(i - 1)[0] + fan.ray(i + 1)[0],
            fan.ray(i - 1)[1] + fan.ray(i + 1)[1],
        )
        u = fan.rays[i]
        if u[0] != 0:
            if s[0] % u[0] != 0:
                raise InternalInconsistency(f"u_{i - 1} + u_{i + 1} not a multiple of u_{i}")
            b = s[0] // u[0]
        else:
            if s[1] % u[1] != 0:
                raise InternalInconsistency(f"u_{i - 1} + u_{i + 1} not a multiple of u_{i}")
            b = s[1] // u[1]
        if (b * u[0], b * u[1]) != s:
            raise InternalInconsistency(f"u_{i - 1} + u_{i + 1} not a multiple of u_{i}")
        out.append(-b)
    return tuple(out)
