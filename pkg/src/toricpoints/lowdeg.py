"""Interpolation machinery for low-degree points on a toric surface.

Computes the surface invariant lambda(S), positive representations of an
ample curve class C, the interpolation divisor floor(C/2), the admissible
degree bound min((C^2 - sum delta_i^2)/9, C^2/4 + lambda), and the
hypothesis/condition verdicts that go with them.  Also reproduces the F_1
family where surjectivity of restriction fails.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Dict, Optional, Sequence, Tuple

from .cohomology import cohomology, vanishing_predicates
from .divisor import (
    Positivity,
    ToricDivisor,
    canonical_divisor,
    classes_equal,
    effective_representative,
    intersect_primes,
    intersection_matrix,
    intersection_number,
    positivity,
    scale,
)
from .errors import ContractViolation, InternalInconsistency, NotAmple, TooManyRays
from .fan import ToricSurfaceFan, hirzebruch

# verdict labels used throughout reports
PASS = "pass"
FAIL = "fail"
NOT_CERTIFIED = "not_certified"
CERTIFIED = "certified_ample"
ASSUMED = "assumed"

MAX_LAMBDA_RAYS = 24  # the subset scan is 2^n


@dataclass(frozen=True)
class CurveOnSurface:
    """Ample curve class C with singularity multiplicities delta_i >= 2
    (empty list = smooth).  Ampleness is a hypothesis checked by the report
    operations, not enforced here."""

    fan: ToricSurfaceFan
    curve_class: ToricDivisor
    multiplicities: Tuple[int, ...] = ()

    def __post_init__(self):
        for d in self.multiplicities:
            if d < 2:
                raise ContractViolation(f"singularity multiplicity {d} < 2")


@dataclass(frozen=True)
class LambdaResult:
    value: Fraction
    inner_min: int
    argmin_subset: Tuple[int, ...]


def lambda_invariant(fan: ToricSurfaceFan) -> LambdaResult:
    """lambda(S) = 2 + (1/4) min over subsets R of (sum_R D_i).(2K + sum_R D_i).

    Scans all 2^n subsets including the empty one (which contributes 0, so
    the value is always <= 2).  Ties broken by subset size, then lexicographic
    index order.
    """
    n = fan.n
    if n > MAX_LAMBDA_RAYS:
        raise TooManyRays(f"{n} rays; the subset scan is capped at {MAX_LAMBDA_RAYS}")
    M = intersection_matrix(fan)
    # K.D_j = -sum_i M[i][j]
    kdot = [-sum(M[i][j] for i in range(n)) for j in range(n)]
    best = None
    for r in range(n + 1):
        for subset in itertools.combinations(range(n), r):
            e2 = sum(M[i][j] for i in subset for j in subset)
            ke = sum(kdot[i] for i in subset)
            val = e2 + 2 * ke
            key = (val, len(subset), subset)
            if best is None or key < best:
                best = key
    val, _, subset = best
    return LambdaResult(value=Fraction(2) + Fraction(val, 4), inner_min=val, argmin_subset=subset)


def arithmetic_genus(fan: ToricSurfaceFan, C: ToricDivisor) -> int:
    """p_a = 1 + (K + C).C / 2."""
    K = canonical_divisor(fan)
    num = intersection_number(K + C, C)
    if num % 2 != 0:
        raise InternalInconsistency("(K + C).C is odd")
    return 1 + num // 2


def blowup_self_intersection(C2: int, multiplicities: Sequence[int]) -> int:
    """Self-intersection of the normalised curve on the blowup:
    C^2 - sum delta_i^2."""
    return C2 - sum(d * d for d in multiplicities)


def seshadri_ample_check(
    fan: ToricSurfaceFan, C: ToricDivisor, multiplicities: Sequence[int]
) -> str:
    """Sufficient ampleness certificate for the normalised curve on the
    blowup: sum delta_i < r = min_i C.D_i (Seshadri lower bound).  Returns
    CERTIFIED or NOT_CERTIFIED; the latter is not a refutation."""
    if positivity(C) is not Positivity.AMPLE:
        raise NotAmple("curve class is not ample")
    if not multiplicities:
        return CERTIFIED
    r = min(intersect_primes(C))
    return CERTIFIED if sum(multiplicities) < r else NOT_CERTIFIED


def positive_curve_representation(
    fan: ToricSurfaceFan, C: ToricDivisor
) -> Optional[ToricDivisor]:
    """Representation C = sum a_i D_i with every a_i >= 1 and some a_j >= 2.

    Exists iff C + K > 0 (effective and not principal).  Built as the lex-min
    non-negative representative of C + K plus (1,...,1); since C + K is
    nonzero effective, some shifted coefficient is >= 2 automatically.
    """
    K = canonical_divisor(fan)
    ck = C + K
    rep0 = effective_representative(ck)
    if rep0 is None:
        return None
    if classes_equal(ck, ToricDivisor(fan, (0,) * fan.n)):
        return None
    return ToricDivisor(fan, tuple(a + 1 for a in rep0.coeffs))


def interpolation_divisor(
    fan: ToricSurfaceFan, positive_rep: ToricDivisor
) -> Tuple[ToricDivisor, int, int]:
    """D = floor(C/2) componentwise for a positive representation of C.

    Returns (D, C.D, C^2).  Checks the proof-shape facts: D nonzero
    effective, C - 2D has 0/1 coefficients, and C.D <= C^2/2.
    """
    a = positive_rep.coeffs
    if any(c < 1 for c in a) or not any(c >= 2 for c in a):
        raise ContractViolation(
            "positive representation must have all a_i >= 1 and some a_j >= 2"
        )
    D = ToricDivisor(fan, tuple(c // 2 for c in a))
    if all(c == 0 for c in D.coeffs):
        raise InternalInconsistency("floor(C/2) is zero for a positive representation")
    rest = tuple(c - 2 * d for c, d in zip(a, D.coeffs))
    if any(r not in (0, 1) for r in rest):
        raise InternalInconsistency("C - 2 floor(C/2) has a coefficient outside {0,1}")
    CD = intersection_number(positive_rep, D)
    C2 = intersection_number(positive_rep, positive_rep)
    if 2 * CD > C2:
        raise InternalInconsistency("C.D > C^2/2 for an interpolation divisor")
    return D, CD, C2


def mainprop_h0_bound(
    fan: ToricSurfaceFan, C_rep: ToricDivisor, D: ToricDivisor, e: int
) -> Fraction:
    """Lower bound (1/4)(C-2D).(2K+C-2D) + 2 + C^2/4 - e for the sections of
    the residual divisor; positivity certifies that degree-e moving divisors
    lift."""
    K = canonical_divisor(fan)
    R = C_rep - 2 * D
    C2 = intersection_number(C_rep, C_rep)
    return (
        Fraction(intersection_number(R, 2 * K + R), 4)
        + 2
        + Fraction(C2, 4)
        - e
    )


@dataclass(frozen=True)
class ConditionVerdicts:
    """Verdicts for the three defining conditions of a degree-e interpolation
    divisor, with the numbers behind them."""

    intersection_bound: str  # C.D < C^2
    surjectivity: str  # h1(D - C) = 0 forces H0(S,D) ->> H0(C,D|_C)
    section_lift: str  # mainprop_h0_bound > 0
    CD: int
    C2: int
    h1_D_minus_C: int
    h0_bound: Fraction
    half_curve_ample: bool  # redundant cross-check: C/2 ample gives the vanishing


def interpolation_conditions(
    fan: ToricSurfaceFan, C_rep: ToricDivisor, D: ToricDivisor, e: int
) -> ConditionVerdicts:
    CD = intersection_number(C_rep, D)
    C2 = intersection_number(C_rep, C_rep)
    h1 = cohomology(D - C_rep).h1
    bound = mainprop_h0_bound(fan, C_rep, D, e)
    half = scale(C_rep, Fraction(1, 2))
    return ConditionVerdicts(
        intersection_bound=PASS if CD < C2 else FAIL,
        surjectivity=PASS if h1 == 0 else FAIL,
        section_lift=PASS if bound > 0 else FAIL,
        CD=CD,
        C2=C2,
        h1_D_minus_C=h1,
        h0_bound=bound,
        half_curve_ample=vanishing_predicates(half).ample,
    )


@dataclass(frozen=True)
class InterpolationReport:
    lambda_value: Fraction
    lambda_subset: Tuple[int, ...]
    positive_rep: Optional[ToricDivisor]
    interp_divisor: Optional[ToricDivisor]
    CD: Optional[int]
    C2: int
    blowup_C2: int
    degree_bound: Fraction
    e_max: Optional[int]
    hypothesis_verdicts: Dict[str, str]
    degB_table: Tuple[Tuple[int, int], ...]
    conditions: Optional[ConditionVerdicts]


def _largest_int_below(x: Fraction) -> Optional[int]:
    # largest integer strictly below x, or None when no positive one exists
    e = floor(x)
    if e == x:
        e -= 1
    return e if e >= 1 else None


def toric_theorem_report(curve: CurveOnSurface) -> InterpolationReport:
    """Run the whole pipeline for one curve class and aggregate verdicts.

    Hypotheses the surface data cannot decide (geometric integrality of C,
    simplicity of its singularities) are echoed as "assumed".
    """
    fan = curve.fan
    C = curve.curve_class
    lam = lambda_invariant(fan)
    verdicts: Dict[str, str] = {
        "geometrically_integral": ASSUMED,
        "simple_singularities": ASSUMED,
    }

    C2 = intersection_number(C, C)
    bl2 = blowup_self_intersection(C2, curve.multiplicities)
    ample = positivity(C) is Positivity.AMPLE
    verdicts["curve_ample"] = PASS if ample else FAIL
    if ample:
        verdicts["blowup_ample"] = seshadri_ample_check(fan, C, curve.multiplicities)
    else:
        verdicts["blowup_ample"] = NOT_CERTIFIED

    rep = positive_curve_representation(fan, C)
    verdicts["C_plus_K_positive"] = PASS if rep is not None else FAIL

    bound = min(Fraction(bl2, 9), Fraction(C2, 4) + lam.value)
    e_max = _largest_int_below(bound)

    D = CD = None
    table: Tuple[Tuple[int, int], ...] = ()
    conditions = None
    if rep is not None:
        D, CD, rep_C2 = interpolation_divisor(fan, rep)
        if rep_C2 != C2:
            raise InternalInconsistency("C^2 changed under re-representation")
        if e_max is not None:
            table = tuple((e, CD - e) for e in range(1, e_max + 1))
            conditions = interpolation_conditions(fan, rep, D, e_max)

    return InterpolationReport(
        lambda_value=lam.value,
        lambda_subset=lam.argmin_subset,
        positive_rep=rep,
        interp_divisor=D,
        CD=CD,
        C2=C2,
        blowup_C2=bl2,
        degree_bound=bound,
        e_max=e_max,
        hypothesis_verdicts=verdicts,
        degB_table=table,
        conditions=conditions,
    )


@dataclass(frozen=True)
class HirzebruchExampleReport:
    """The F_1 family where the natural restriction map fails to surject:
    C = n C_0 + (n+1) F and D = C_0 + 3F."""

    n: int
    C2: int
    deg_P: int  # = D.C
    low_degree_regime: bool  # 9 deg_P < C^2
    h0_D: int
    h1_D: int
    h1_D_minus_C: int
    h0_C_P: int  # = h0(S,D) + h1(S,D-C)
    surjectivity_fails: bool


def hirzebruch_counterexample(n: int) -> HirzebruchExampleReport:
    if n < 1:
        raise ContractViolation(f"n must be >= 1, got {n}")
    fan = hirzebruch(1)
    # class dictionary on F_1: F ~ D_1, C_0 ~ D_2
    C = ToricDivisor(fan, (n + 1, n, 0, 0))
    D = ToricDivisor(fan, (3, 1, 0, 0))
    C2 = intersection_number(C, C)
    degP = intersection_number(D, C)
    coh_D = cohomology(D)
    h1_dc = cohomology(D - C).h1
    return HirzebruchExampleReport(
        n=n,
        C2=C2,
        deg_P=degP,
        low_degree_regime=9 * degP < C2,
        h0_D=coh_D.h0,
        h1_D=coh_D.h1,
        h1_D_minus_C=h1_dc,
        h0_C_P=coh_D.h0 + h1_dc,
        surjectivity_fails=h1_dc > 0,
    )
