"""Degree bounds and decomposition parameters for plane curves.

Specialises the interpolation machinery to curves of degree d in P^2 with
delta ordinary nodes and cusps.  The bounds involve sqrt(d^2 - 36 delta);
all comparisons against it are done by squaring with sign guards, never with
floats, because the interesting values sit right at integer boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import HypothesisViolation

# verdict labels shared with the toric reports
from .lowdeg import FAIL, PASS


@dataclass(frozen=True)
class PlaneCurveSpec:
    """Plane curve of degree d >= 4 with delta nodes/cusps."""

    d: int
    delta: int = 0

    @property
    def hypothesis_ok(self) -> bool:
        # delta <= (d-3)/3, kept in integers
        return self.d >= 4 and 0 <= 3 * self.delta <= self.d - 3


def _check_discriminant(d: int, delta: int) -> int:
    disc = d * d - 36 * delta
    if disc < 0:
        raise HypothesisViolation(f"d^2 < 36 delta for d={d}, delta={delta}")
    return disc


def sqrt_ceil_term(d: int, delta: int) -> int:
    """ceil((d + sqrt(d^2 - 36 delta)) / 6), exactly.

    The smallest integer t with 6t >= d and (6t - d)^2 >= d^2 - 36 delta.
    """
    disc = _check_discriminant(d, delta)
    t = -(-d // 6)  # ceil(d/6)
    while (6 * t - d) ** 2 < disc:
        t += 1
    return t


def plane_degree_bound(d: int, delta: int) -> Tuple[Fraction, Fraction, Fraction]:
    """(e_bound, term1, term2) with term1 = (d^2 - 4 delta)/9 and
    term2 = (t(d - t) - delta)/2 for the ceiled t; e_bound is their max."""
    _check_discriminant(d, delta)
    term1 = Fraction(d * d - 4 * delta, 9)
    t = sqrt_ceil_term(d, delta)
    term2 = Fraction(t * (d - t) - delta, 2)
    return max(term1, term2), term1, term2


def find_m(d: int, delta: int, e: int) -> Optional[int]:
    """The curve degree m with m(d-m) <= e + delta < (m+1)(d-(m+1)).

    Returns None when e + delta < d - 1 (degree-e divisors cannot move, by
    the gonality floor) or when no m < d/2 satisfies the sandwich.
    """
    if e + delta < d - 1:
        return None
    m = 1
    while 2 * m < d:
        if m * (d - m) <= e + delta < (m + 1) * (d - (m + 1)):
            bound, _, _ = plane_degree_bound(d, delta)
            if e < bound:
                # in range, m must stay below (d + sqrt(d^2 - 36 delta))/6;
                # squared test with sign guard
                disc = d * d - 36 * delta
                assert 6 * m - d < 0 or (6 * m - d) ** 2 < disc
            return m
        m += 1
    return None


@dataclass(frozen=True)
class ChainLevel:
    level: int
    degree_bound: Fraction  # degrees at this level are <= (level 0) or < it
    m: Optional[int]


@dataclass(frozen=True)
class PlaneReport:
    d: int
    delta: int
    e: int
    e_bound: Fraction
    term1: Fraction
    ceil_term: int
    term2: Fraction
    m: Optional[int]
    degB: Optional[int]
    chain: Tuple[ChainLevel, ...]
    hypotheses: Dict[str, str]
    conclusion_guaranteed: bool


def decomposition_chain(d: int, delta: int, e: int) -> List[ChainLevel]:
    """Numeric skeleton of the inductive decomposition: base-divisor degree
    bounds halve at every level (e/2, e/4, ...) until only non-moving and
    singular points can remain."""
    levels = [ChainLevel(level=0, degree_bound=Fraction(e), m=find_m(d, delta, e))]
    m0 = levels[0].m
    if m0 is None or m0 * d - e <= 0:
        return levels
    bound = Fraction(e, 2)
    level = 1
    while True:
        if bound + delta < d - 1:
            levels.append(ChainLevel(level=level, degree_bound=bound, m=None))
            return levels
        # largest integer degree strictly below the bound
        top = (bound.numerator - 1) // bound.denominator if bound.denominator > 1 else int(bound) - 1
        m = find_m(d, delta, top)
        levels.append(ChainLevel(level=level, degree_bound=bound, m=m))
        if m is None or m * d - top <= 0:
            return levels
        bound = bound / 2
        level += 1


def plane_theorem_report(d: int, delta: int, e: int) -> PlaneReport:
    """Full verdict sheet for one (d, delta, e).

    Failed hypotheses are reported, not raised.  Outside the guaranteed
    range we still compute m and deg B when the sandwich inequality has a
    solution, flagged via conclusion_guaranteed.
    """
    e_bound, term1, term2 = plane_degree_bound(d, delta)
    t = sqrt_ceil_term(d, delta)
    hypotheses = {
        "degree_at_least_4": PASS if d >= 4 else FAIL,
        "delta_small": PASS if 3 * delta <= d - 3 and delta >= 0 else FAIL,
        "e_in_range": PASS if 0 < e < e_bound else FAIL,
        "blowup_ample_2delta_lt_d": PASS if 2 * delta < d else FAIL,
    }
    guaranteed = all(v == PASS for v in hypotheses.values())
    m = find_m(d, delta, e)
    degB = m * d - e if m is not None else None
    if guaranteed and degB is not None:
        assert Fraction(degB) < Fraction(e, 2)
    return PlaneReport(
        d=d,
        delta=delta,
        e=e,
        e_bound=e_bound,
        term1=term1,
        ceil_term=t,
        term2=term2,
        m=m,
        degB=degB,
        chain=tuple(decomposition_chain(d, delta, e)),
        hypotheses=hypotheses,
        conclusion_guaranteed=guaranteed,
    )


@dataclass(frozen=True)
class GonalityFloor:
    """Whether a degree-e divisor is allowed to move (e + delta >= d - 1),
    plus the m = 2 gonality hypothesis delta < d - 1 behind that floor."""

    allows_moving: bool
    m2_hypothesis: bool

    def __bool__(self) -> bool:
        return self.allows_moving


def gonality_floor(d: int, delta: int, e: int) -> GonalityFloor:
    return GonalityFloor(
        allows_moving=e + delta >= d - 1,
        m2_hypothesis=delta < d - 1,
    )


def remark_inequality_check(d: int, delta: int) -> bool:
    """The un-ceiled inequality (d^2-4delta)/9 >= (1/2)(x(d-x) - delta) for
    x = (d + sqrt(d^2 - 36 delta))/6.

    Algebra reduces it to d^2 - 8 delta >= d sqrt(d^2 - 36 delta); decided
    by the squared comparison under the sign guard d^2 >= 8 delta.  Holds on
    every admissible (d, delta).
    """
    disc = _check_discriminant(d, delta)
    lhs = d * d - 8 * delta
    if lhs < 0:
        return False
    return lhs * lhs >= d * d * disc
