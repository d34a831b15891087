from fractions import Fraction

import pytest
import sympy

from toricpoints import (
    decomposition_chain,
    find_m,
    gonality_floor,
    plane_degree_bound,
    plane_theorem_report,
    remark_inequality_check,
    sqrt_ceil_term,
)
from toricpoints.errors import HypothesisViolation
from toricpoints.plane import PlaneCurveSpec


def sympy_ceil_term(d, delta):
    # independent exact oracle for ceil((d + sqrt(d^2 - 36 delta)) / 6)
    return int(sympy.ceiling((d + sympy.sqrt(d * d - 36 * delta)) / 6))


def test_sqrt_ceil_term_examples():
    assert sqrt_ceil_term(9, 0) == 3  # (9+9)/6 exactly
    assert sqrt_ceil_term(10, 2) == 3  # (10+sqrt(28))/6 ~ 2.55
    assert sqrt_ceil_term(8, 0) == 3  # 16/6 ~ 2.67


def test_sqrt_ceil_term_against_sympy():
    for d in range(4, 61):
        for delta in range(0, (d - 3) // 3 + 1):
            assert sqrt_ceil_term(d, delta) == sympy_ceil_term(d, delta)


def test_sqrt_ceil_smooth_closed_form():
    for d in range(1, 100):
        assert sqrt_ceil_term(d, 0) == -(-d // 3)  # ceil(d/3)


def test_sqrt_ceil_hypothesis_violation():
    with pytest.raises(HypothesisViolation):
        sqrt_ceil_term(5, 1)  # 25 < 36


def test_plane_degree_bound_examples():
    bound, term1, term2 = plane_degree_bound(8, 0)
    assert (bound, term1, term2) == (Fraction(15, 2), Fraction(64, 9), Fraction(15, 2))
    bound, term1, term2 = plane_degree_bound(9, 0)
    assert bound == term1 == term2 == 9  # the 3 | d equality case
    bound, term1, term2 = plane_degree_bound(10, 2)
    assert (bound, term1, term2) == (Fraction(92, 9), Fraction(92, 9), Fraction(19, 2))


def test_find_m_examples():
    assert find_m(8, 0, 7) == 1  # 7 <= 7 < 12: lines through one point
    assert find_m(10, 2, 10) == 1  # 9 <= 12 < 16
    assert find_m(9, 0, 5) is None  # below the gonality floor d - 1


def test_find_m_sandwich_and_monotone():
    for d in range(4, 40):
        for delta in range(0, (d - 3) // 3 + 1):
            prev = 0
            for e in range(1, d * d // 4):
                m = find_m(d, delta, e)
                if m is not None:
                    assert m * (d - m) <= e + delta < (m + 1) * (d - (m + 1))
                    assert 1 <= m and 2 * m < d
                    assert m >= prev
                    prev = m


def test_plane_report_debarre_klassen():
    r = plane_theorem_report(8, 0, 7)
    assert r.m == 1 and r.degB == 1
    assert Fraction(r.degB) < Fraction(r.e, 2)
    assert r.conclusion_guaranteed
    r = plane_theorem_report(9, 0, 8)
    assert r.m == 1 and r.degB == 1
    r = plane_theorem_report(10, 2, 10)
    assert r.m == 1 and r.degB == 0
    assert all(v == "pass" for v in r.hypotheses.values())


def test_plane_report_out_of_range_not_guaranteed():
    r = plane_theorem_report(8, 0, 20)
    assert not r.conclusion_guaranteed
    assert r.hypotheses["e_in_range"] == "fail"


def test_decomposition_chains():
    chain = decomposition_chain(9, 0, 8)
    assert [(l.level, l.degree_bound, l.m) for l in chain] == [
        (0, Fraction(8), 1),
        (1, Fraction(4), None),
    ]
    chain = decomposition_chain(8, 0, 7)
    assert [(l.level, l.degree_bound, l.m) for l in chain] == [
        (0, Fraction(7), 1),
        (1, Fraction(7, 2), None),
    ]
    # deg B = 0 at level 0: nothing left to decompose
    chain = decomposition_chain(20, 0, 40)
    assert [(l.level, l.degree_bound, l.m) for l in chain] == [(0, Fraction(40), 2)]


def test_chain_bounds_halve():
    for d, delta, e in [(9, 0, 8), (8, 0, 7), (30, 0, 80), (40, 3, 150)]:
        chain = decomposition_chain(d, delta, e)
        for prev, nxt in zip(chain, chain[1:]):
            assert nxt.degree_bound <= prev.degree_bound / 2


def test_remark_inequality_examples():
    assert remark_inequality_check(10, 2)
    assert remark_inequality_check(9, 0)
    assert remark_inequality_check(4, 0)


def test_remark_inequality_sweep_and_ceiled_equality():
    for d in range(4, 61):
        for delta in range(0, (d - 3) // 3 + 1):
            assert remark_inequality_check(d, delta)
            _, term1, term2 = plane_degree_bound(d, delta)
            if term2 == term1:
                assert delta == 0 and d % 3 == 0
            if delta == 0 and d % 3 == 0:
                assert term2 == term1


def test_gonality_floor():
    assert gonality_floor(9, 0, 8).allows_moving
    assert bool(gonality_floor(9, 0, 8))
    assert not gonality_floor(9, 0, 7).allows_moving
    assert gonality_floor(10, 2, 7).allows_moving  # 9 >= 9
    assert gonality_floor(10, 2, 7).m2_hypothesis  # 2 < 9


def test_plane_curve_spec_hypothesis():
    assert PlaneCurveSpec(10, 2).hypothesis_ok
    assert not PlaneCurveSpec(10, 3).hypothesis_ok
    assert not PlaneCurveSpec(3, 0).hypothesis_ok
