"""Divisor polytopes and the full cohomology profile of a toric divisor.

h0 is a lattice-point count in the divisor polytope, h2 comes from Serre
duality as the count for K - D, chi from Hirzebruch-Riemann-Roch, and h1 by
difference.  Everything is exact; no floating point in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from . import geometry
from .divisor import (
    AnyDivisor,
    Positivity,
    ToricDivisor,
    canonical_divisor,
    intersection_number,
    positivity,
)
from .errors import InternalInconsistency


@dataclass(frozen=True)
class DivisorPolytope:
    """P_D = {x : <x, u_i> >= -a_i}, with exact rational vertices.

    dim is the affine dimension of the vertex hull: -1 empty, 0 point,
    1 segment, 2 polygon.
    """

    halfplanes: Tuple[geometry.HalfPlane, ...]
    vertices: Tuple[geometry.QPoint, ...]
    dim: int


@dataclass(frozen=True)
class CohomologyProfile:
    h0: int
    h1: int
    h2: int
    chi: int


def divisor_polytope(D: AnyDivisor) -> DivisorPolytope:
    halfplanes = tuple((u, Fraction(-a)) for u, a in zip(D.fan.rays, D.coeffs))
    vertices = tuple(sorted(geometry.feasible_vertices(halfplanes)))
    return DivisorPolytope(
        halfplanes=halfplanes,
        vertices=vertices,
        dim=geometry.hull_dimension(vertices),
    )


def lattice_point_count(P: DivisorPolytope) -> int:
    return len(geometry.lattice_points(P.halfplanes, P.vertices))


def euler_characteristic(D: ToricDivisor) -> int:
    """chi(D) = 1 + (D^2 - K.D)/2 by Hirzebruch-Riemann-Roch (chi(O) = 1)."""
    K = canonical_divisor(D.fan)
    num = intersection_number(D, D) - intersection_number(K, D)
    if num % 2 != 0:
        raise InternalInconsistency("D^2 - K.D is odd")
    return 1 + num // 2


def cohomology(D: ToricDivisor) -> CohomologyProfile:
    """Full profile: h0 and h2 by lattice counts, chi by HRR, h1 = h0+h2-chi."""
    K = canonical_divisor(D.fan)
    h0 = lattice_point_count(divisor_polytope(D))
    h2 = lattice_point_count(divisor_polytope(K - D))
    chi = euler_characteristic(D)
    h1 = h0 + h2 - chi
    if h1 < 0:
        raise InternalInconsistency(f"negative h1 = {h1} for coeffs {D.coeffs}")
    return CohomologyProfile(h0=h0, h1=h1, h2=h2, chi=chi)


@dataclass(frozen=True)
class VanishingReport:
    """Which vanishings the toric vanishing theorem guarantees for floor(D)
    and -ceil(D), from the nef/ample status of the Q-divisor D alone.  The
    cohomology itself is not computed here."""

    nef: bool
    floor_higher_vanishing_expected: bool
    ample: bool
    anti_ceil_h0_h1_vanishing_expected: bool
    dim_PD: int


def vanishing_predicates(D: AnyDivisor) -> VanishingReport:
    pos = positivity(D)
    nef = pos in (Positivity.AMPLE, Positivity.NEF_NOT_AMPLE)
    ample = pos is Positivity.AMPLE
    dim_PD = divisor_polytope(D).dim
    return VanishingReport(
        nef=nef,
        floor_higher_vanishing_expected=nef,
        ample=ample,
        anti_ceil_h0_h1_vanishing_expected=ample,
        dim_PD=dim_PD,
    )
