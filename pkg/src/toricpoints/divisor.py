"""Exact divisor arithmetic on a smooth complete toric surface.

Divisors are coefficient vectors over the prime toric divisors D_1..D_n of a
fixed fan.  Everything is immutable and exact (int / Fraction); cross-fan
operations raise FanMismatch rather than coerce.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor
from typing import List, Optional, Sequence, Tuple, Union

from . import geometry
from .errors import FanMismatch
from .fan import LatticePoint, ToricSurfaceFan, dot, prime_self_intersections


@dataclass(frozen=True)
class ToricDivisor:
    """Integral toric divisor sum(a_i D_i)."""

    fan: ToricSurfaceFan
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.fan.n:
            raise FanMismatch(
                f"{len(self.coeffs)} coefficients for a fan with {self.fan.n} rays"
            )
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __add__(self, other):
        return _combine(self, other, lambda a, b: a + b)

    def __sub__(self, other):
        return _combine(self, other, lambda a, b: a - b)

    def __neg__(self):
        return ToricDivisor(self.fan, tuple(-c for c in self.coeffs))

    def __mul__(self, s):
        return scale(self, s)

    __rmul__ = __mul__

    def as_rational(self) -> "QToricDivisor":
        return QToricDivisor(self.fan, tuple(Fraction(c) for c in self.coeffs))


@dataclass(frozen=True)
class QToricDivisor:
    """Toric Q-divisor: exact rational coefficients."""

    fan: ToricSurfaceFan
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.fan.n:
            raise FanMismatch(
                f"{len(self.coeffs)} coefficients for a fan with {self.fan.n} rays"
            )
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def __add__(self, other):
        return _combine(self, other, lambda a, b: a + b)

    def __sub__(self, other):
        return _combine(self, other, lambda a, b: a - b)

    def __neg__(self):
        return QToricDivisor(self.fan, tuple(-c for c in self.coeffs))

    def __mul__(self, s):
        return scale(self, s)

    __rmul__ = __mul__


AnyDivisor = Union[ToricDivisor, QToricDivisor]


def _check_same_fan(D: AnyDivisor, E: AnyDivisor) -> None:
    if not D.fan.same_surface(E.fan):
        raise FanMismatch("divisors live on different fans")


def _combine(D: AnyDivisor, E: AnyDivisor, op) -> AnyDivisor:
    _check_same_fan(D, E)
    coeffs = tuple(op(a, b) for a, b in zip(D.coeffs, E.coeffs))
    if isinstance(D, ToricDivisor) and isinstance(E, ToricDivisor):
        return ToricDivisor(D.fan, coeffs)
    return QToricDivisor(D.fan, tuple(Fraction(c) for c in coeffs))


def scale(D: AnyDivisor, s) -> AnyDivisor:
    coeffs = tuple(c * s for c in D.coeffs)
    if isinstance(D, ToricDivisor) and isinstance(s, int):
        return ToricDivisor(D.fan, coeffs)
    return QToricDivisor(D.fan, tuple(Fraction(c) for c in coeffs))


def principal_divisor(fan: ToricSurfaceFan, m: LatticePoint) -> ToricDivisor:
    """div(chi^m) = sum <m, u_i> D_i."""
    return ToricDivisor(fan, tuple(dot(m, u) for u in fan.rays))


def canonical_divisor(fan: ToricSurfaceFan) -> ToricDivisor:
    """K = -sum D_i."""
    return ToricDivisor(fan, (-1,) * fan.n)


@lru_cache(maxsize=None)
def intersection_matrix(fan: ToricSurfaceFan) -> Tuple[Tuple[int, ...], ...]:
    """Pairing of prime divisors: D_i.D_j is 1 for cyclically adjacent rays,
    0 for distinct non-adjacent ones, and the self-intersection on the
    diagonal."""
    n = fan.n
    selfs = prime_self_intersections(fan)
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        j = (i + 1) % n
        M[i][j] = 1
        M[j][i] = 1
    for i in range(n):
        M[i][i] = selfs[i]
    return tuple(tuple(row) for row in M)


def intersection_number(D: AnyDivisor, E: AnyDivisor):
    """Bilinear extension of the prime-divisor pairing.  Returns an int for
    integral inputs, a Fraction otherwise."""
    _check_same_fan(D, E)
    M = intersection_matrix(D.fan)
    n = D.fan.n
    total = 0
    for i, a in enumerate(D.coeffs):
        if a == 0:
            continue
        row = M[i]
        total += a * sum(b * row[j] for j, b in enumerate(E.coeffs) if b != 0)
    if isinstance(total, Fraction) and total.denominator == 1:
        return int(total)
    return total


def intersect_primes(D: AnyDivisor) -> List:
    """The vector (D.D_1, ..., D.D_n)."""
    M = intersection_matrix(D.fan)
    n = D.fan.n
    out = []
    for j in range(n):
        v = sum(D.coeffs[i] * M[i][j] for i in range(n))
        if isinstance(v, Fraction) and v.denominator == 1:
            v = int(v)
        out.append(v)
    return out


def classes_equal(D: AnyDivisor, E: AnyDivisor) -> bool:
    """Linear equivalence test: D - E must be a principal divisor div(chi^m).

    The first two rays form a lattice basis (their det is 1), so m is pinned
    by two coordinates and then checked on all n.
    """
    _check_same_fan(D, E)
    diff = [a - b for a, b in zip(D.coeffs, E.coeffs)]
    u1, u2 = D.fan.rays[0], D.fan.rays[1]
    # solve <m,u1> = diff[0], <m,u2> = diff[1]; det(u1,u2) = 1
    m = (
        diff[0] * u2[1] - diff[1] * u1[1],
        u1[0] * diff[1] - u2[0] * diff[0],
    )
    if m[0] != int(m[0]) or m[1] != int(m[1]):
        return False
    m = (int(m[0]), int(m[1]))
    return all(dot(m, u) == d for u, d in zip(D.fan.rays, diff))


def floor_div(D: AnyDivisor) -> ToricDivisor:
    """Componentwise floor of the given representation (representation
    dependent by design)."""
    return ToricDivisor(D.fan, tuple(floor(c) for c in D.coeffs))


def ceil_div(D: AnyDivisor) -> ToricDivisor:
    """Componentwise ceiling of the given representation."""
    return ToricDivisor(D.fan, tuple(ceil(c) for c in D.coeffs))


class Positivity(enum.Enum):
    AMPLE = "ample"
    NEF_NOT_AMPLE = "nef_not_ample"
    NOT_NEF = "not_nef"


def positivity(D: AnyDivisor) -> Positivity:
    """Toric Kleiman classification from the n numbers D.D_i: nef iff all
    are >= 0, ample iff all are > 0."""
    pairings = intersect_primes(D)
    if all(p > 0 for p in pairings):
        return Positivity.AMPLE
    if all(p >= 0 for p in pairings):
        return Positivity.NEF_NOT_AMPLE
    return Positivity.NOT_NEF


def effective_representative(
    D: ToricDivisor, lower_bounds: Optional[Sequence[int]] = None
) -> Optional[ToricDivisor]:
    """Linearly equivalent representative with coeffs[i] >= lower_bounds[i].

    Shifts by a principal divisor div(chi^m); feasible m form a bounded
    rational polygon, and among its lattice points the lexicographically
    smallest (m.x, then m.y) is taken so outputs are deterministic.  Returns
    None when no lattice point is feasible (the class is not effective at
    those bounds).
    """
    n = D.fan.n
    if lower_bounds is None:
        lower_bounds = [0] * n
    if len(lower_bounds) != n:
        raise FanMismatch(f"{len(lower_bounds)} bounds for a fan with {n} rays")
    halfplanes = [
        (u, Fraction(lb - a))
        for u, a, lb in zip(D.fan.rays, D.coeffs, lower_bounds)
    ]
    pts = geometry.lattice_points(halfplanes)
    if not pts:
        return None
    m = min(pts)
    return ToricDivisor(D.fan, tuple(a + dot(m, u) for a, u in zip(D.coeffs, D.fan.rays)))
