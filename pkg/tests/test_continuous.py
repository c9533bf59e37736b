import json
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from younghull.continuous import (
    DiscreteProfile,
    PLFunction,
    ProfileError,
    area_F,
    area_minimum,
    as_rectangular,
    check_identities,
    discretize_profile,
    distance_D,
    distance_D_grid,
    equals,
    make_profile,
    min_value,
    random_profile,
    rectangle_identity,
    rectangular_R,
    solve_foot,
    zero_of,
)
from younghull.hull import cyclic_distance, vertex_direct
from younghull.partitions import durfee_side, enumerate_young

seeds = st.integers(0, 2 ** 32 - 1)


def numeric_F(prof, t, steps=4000):
    # bisection for the foot plus a midpoint rule; uses only point evaluation
    t = float(t) % 2.0
    g = lambda a: a + float(prof(Q(a)))
    lo = float(prof.u)
    hi = lo + 2.0
    if g(lo) > t:
        t += 2.0
    lo_a, hi_a = lo, lo + 3.0
    for _ in range(80):
        mid = (lo_a + hi_a) / 2
        if g(mid) < t:
            lo_a = mid
        else:
            hi_a = mid
    a = hi_a
    h = 1.0 / steps
    integral = sum(float(prof(Q(a + (i + 0.5) * h))) for i in range(steps)) * h
    la, lb = float(prof(Q(a))), float(prof(Q(a + 1)))
    return integral - (la * la + lb * lb) / 2


def test_rectangular_profiles():
    r0 = rectangular_R(0)
    assert r0(Q(-1)) == 1 and r0(Q(0)) == 0
    assert equals(rectangular_R(0), rectangular_R(1))
    assert not equals(rectangular_R(0), rectangular_R(Q(1, 2)))
    with pytest.raises(ValueError):
        rectangular_R(2)


@pytest.mark.parametrize("r", [Q(0), Q(1, 3), Q(1, 2), Q(5, 7), Q(1)])
def test_area_of_rectangles(r):
    prof = rectangular_R(r)
    for i in range(41):
        t = 2 * r + Q(2 * i, 40)
        assert area_F(prof, t) == (t - 2 * r) * (2 * r + 2 - t) / 2


def test_area_is_two_periodic():
    prof = random_profile(random.Random(3))
    for t in (Q(0), Q(1, 3), Q(7, 5)):
        assert area_F(prof, t) == area_F(prof, t + 2) == area_F(prof, t - 4)


@settings(max_examples=15, deadline=None)
@given(seeds, st.integers(0, 19))
def test_area_against_numeric(seed, i):
    prof = random_profile(random.Random(seed))
    t = Q(i, 10)
    assert abs(float(area_F(prof, t)) - numeric_F(prof, t)) < 1e-5


@given(seeds)
def test_random_profiles_are_valid(seed):
    prof = random_profile(random.Random(seed))
    pts = prof.extended(2)
    for (t0, v0), (t1, v1) in zip(pts, pts[1:]):
        assert abs(v1 - v0) <= t1 - t0
    assert all(0 <= v <= 1 for _, v in pts)
    for t in (prof.u, prof.u + Q(1, 3), prof.u + Q(7, 4)):
        assert prof(t + 1) == 1 - prof(t)


@given(seeds)
def test_profile_json_round_trip(seed):
    prof = random_profile(random.Random(seed))
    text = json.dumps(prof.to_json())
    back = PLFunction.from_json(text)
    assert back == prof
    assert equals(back, prof)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 96))
def test_rectangle_identity_property(seed, k):
    prof = random_profile(random.Random(seed))
    lhs, rhs = rectangle_identity(prof, prof.u + Q(k, 97))
    assert lhs == rhs


def test_rectangle_identity_bulk():
    assert check_identities(samples=100, seed=1) == 0


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_zero_characterisations(seed):
    prof = random_profile(random.Random(seed), max_pieces=4, denominator=6)
    has_zero = zero_of(prof) is not None
    assert has_zero == (min_value(prof) == 0)
    assert has_zero == (area_minimum(prof) == 0)
    assert has_zero == (as_rectangular(prof) is not None)


def test_foot_solution():
    prof = random_profile(random.Random(5))
    for i in range(20):
        t = Q(i, 10)
        a = solve_foot(prof, t)
        assert (a + prof(a) - t) % 2 == 0


def test_distance_D():
    assert distance_D(0, Q(1, 2)) == Q(1, 2)
    assert distance_D(Q(1, 4), Q(1, 4)) == 0
    for n in range(2, 10):
        for j in range(n):
            for k in range(n):
                assert distance_D(Q(j, n), Q(k, n)) * n * n / 2 == cyclic_distance(j, k, n)
    with pytest.raises(ValueError):
        distance_D(0, 2)


def test_distance_grid():
    assert distance_D_grid(0, Q(1, 2), samples=400) == Q(1, 2)
    assert distance_D_grid(Q(1, 5), Q(1, 5), samples=50) == 0


def test_discrete_profile_worked_example():
    disc, prof = discretize_profile((5, 3, 3, 2), 9)
    assert disc.table(-4, 4) == [4, 5, 6, 5, 6, 5, 4, 5, 6]
    assert disc(0) == 6 == 2 * durfee_side((5, 3, 3, 2))
    assert prof(Q(0)) == Q(6, 9)


@pytest.mark.parametrize("n", range(2, 9))
def test_discrete_profiles(n):
    for lam in enumerate_young(n):
        disc, prof = discretize_profile(lam, n)
        assert disc(0) == 2 * durfee_side(lam)
        for t in range(-2 * n, 2 * n):
            assert disc(t + n) == n - disc(t)
            assert abs(disc(t + 1) - disc(t)) == 1
            assert prof(Q(t, n)) == Q(disc(t), n)


def test_discrete_profile_object():
    d = DiscreteProfile(2, -1, (1, 2))
    assert d.table(-1, 2) == [1, 2, 1, 0]


def test_invalid_profiles():
    with pytest.raises(ProfileError, match="Lipschitz"):
        make_profile(0, [(0, 0), (Q(1, 4), Q(1, 2)), (1, 1)])
    with pytest.raises(ProfileError, match="boundary"):
        make_profile(0, [(0, Q(1, 2)), (1, 1)])
    with pytest.raises(ProfileError, match="span"):
        make_profile(0, [(0, 0), (Q(1, 2), Q(1, 2))])
    with pytest.raises(ProfileError, match="jump"):
        make_profile(0, [(0, 0), (Q(1, 2), Q(1, 2)), (Q(1, 2), 0), (1, 1)])
    with pytest.raises(ProfileError):
        make_profile(Q(1, 2), [(Q(1, 2), 0), (Q(3, 2), 1)])


def test_complete_flag():
    prof = make_profile(Q(-1, 2), [(Q(-1, 2), Q(1, 2)), (0, 0)], complete=True)
    assert prof.breakpoints[-1] == (Q(1, 2), Q(1, 2))
    assert as_rectangular(prof) == 0
    with pytest.raises(ProfileError, match="complete"):
        make_profile(Q(-1, 2), [(Q(-1, 2), Q(1, 2)), (0, Q(1, 4))], complete=True)


@pytest.mark.parametrize("n", range(2, 9))
def test_scaled_area_recovers_vertex(n):
    # observed relation: the area function of the rescaled rim profile,
    # sampled at t = 2l/N and scaled by N^2/2, is the hull vertex f_lam
    for lam in enumerate_young(n):
        _, prof = discretize_profile(lam, n)
        f = vertex_direct(lam, n).values
        assert [area_F(prof, Q(2 * l, n)) * n * n / 2 for l in range(n)] == list(f)
