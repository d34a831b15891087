import pytest

from toricpoints import (
    build_fan,
    builtin_surface,
    hirzebruch,
    lambda_invariant,
    p1xp1,
    p2,
    prime_self_intersections,
)
from toricpoints.errors import (
    DuplicateRay,
    InputError,
    NonPrimitiveRay,
    NotSmoothOrNotComplete,
)


def test_p2_fan():
    fan = build_fan([(1, 0), (0, 1), (-1, -1)])
    assert fan.rays == ((1, 0), (0, 1), (-1, -1))
    assert fan.n == 3


def test_f1_fan():
    fan = build_fan([(1, 0), (0, 1), (-1, 1), (0, -1)])
    assert fan.n == 4


def test_non_smooth_rejected():
    # det((0,1), (-2,-1)) = 2
    with pytest.raises(NotSmoothOrNotComplete):
        build_fan([(1, 0), (0, 1), (-2, -1)])


def test_non_primitive_rejected():
    with pytest.raises(NonPrimitiveRay):
        build_fan([(2, 0), (0, 1), (-1, -1)])


def test_duplicate_rejected():
    with pytest.raises(DuplicateRay):
        build_fan([(1, 0), (0, 1), (1, 0), (0, -1)])


def test_too_few_rays_rejected():
    with pytest.raises(NotSmoothOrNotComplete):
        build_fan([(1, 0), (0, 1)])


def test_wrong_cyclic_order_rejected():
    # clockwise order flips every det to -1
    with pytest.raises(NotSmoothOrNotComplete):
        build_fan([(-1, -1), (0, 1), (1, 0)])


def test_builtin_surfaces():
    assert builtin_surface("P2").rays == ((1, 0), (0, 1), (-1, -1))
    assert builtin_surface("hirzebruch", 1).rays == ((1, 0), (0, 1), (-1, 1), (0, -1))
    assert builtin_surface("F3").rays == ((1, 0), (0, 1), (-1, 3), (0, -1))
    # F_0 = P^1 x P^1
    assert hirzebruch(0).rays == p1xp1().rays
    with pytest.raises(InputError):
        builtin_surface("P3")
    with pytest.raises(InputError):
        builtin_surface("hirzebruch", -1)


def test_prime_self_intersections_p2():
    # (0,1) + (-1,-1) = -1*(1,0) etc: all lines, self-intersection 1
    assert prime_self_intersections(p2()) == (1, 1, 1)


def test_prime_self_intersections_hirzebruch():
    assert prime_self_intersections(hirzebruch(1)) == (0, -1, 0, 1)
    assert prime_self_intersections(hirzebruch(2)) == (0, -2, 0, 2)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_hirzebruch_self_intersection_pattern(m):
    selfs = sorted(prime_self_intersections(hirzebruch(m)))
    assert selfs == [-m, 0, 0, m]


def test_rotation_gives_same_surface_invariants():
    base = [(1, 0), (0, 1), (-1, 1), (0, -1)]
    lam = lambda_invariant(build_fan(base)).value
    for k in range(1, 4):
        rotated = build_fan(base[k:] + base[:k])
        assert lambda_invariant(rotated).value == lam
        assert sorted(prime_self_intersections(rotated)) == sorted(
            prime_self_intersections(build_fan(base))
        )
