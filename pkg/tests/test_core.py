import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from minmodels.core import (AdmissibleChange, SingularModelError, WeierstrassModel,
                            add_points, invariants, multiply_point, negate_point,
                            point_order, transform, valuation)
from minmodels.families import build_ET

Q = Fraction
O = (Q(0), Q(0))

rationals = st.builds(Fraction, st.integers(-10**4, 10**4), st.integers(1, 50))
units = st.builds(Fraction, st.integers(1, 10**4) | st.integers(-10**4, -1), st.integers(1, 50))


def test_invariants_examples():
    inv = invariants(WeierstrassModel(0, 7, 0, 6, 0))  # y^2 = x(x+6)(x+1)
    assert inv.discriminant == 14400
    inv = invariants(WeierstrassModel(0, 0, 1, 0, 0))
    assert (inv.c4, inv.c6, inv.discriminant) == (0, -216, -27)
    assert inv.j == 0


def test_invariants_singular_has_no_j():
    inv = invariants(WeierstrassModel(0, 0, 0, 0, 0))
    assert inv.discriminant == 0 and inv.j is None


def test_invariants_relation_on_random_models():
    m = WeierstrassModel(1, -1, 3, Q(5, 7), -2)
    inv = invariants(m)
    assert inv.c4**3 - inv.c6**2 == 1728 * inv.discriminant
    assert 4 * inv.b8 == inv.b2 * inv.b6 - inv.b4**2


def test_transform_rejects_zero_u():
    with pytest.raises(ValueError):
        AdmissibleChange(0, 1, 2, 3)


@settings(max_examples=150, deadline=None)
@given(st.tuples(rationals, rationals, rationals, rationals, rationals), units, rationals,
       rationals, rationals)
def test_transform_scales_invariants(coeffs, u, r, s, w):
    m = WeierstrassModel(*coeffs)
    ch = AdmissibleChange(u, r, s, w)
    m2 = transform(m, ch)
    i1, i2 = invariants(m), invariants(m2)
    assert i2.c4 == i1.c4 / u**4
    assert i2.c6 == i1.c6 / u**6
    assert i2.discriminant == i1.discriminant / u**12
    assert transform(m2, ch.inverse()) == m


@settings(max_examples=100, deadline=None)
@given(st.tuples(rationals, rationals, rationals, rationals, rationals), units, rationals,
       rationals, rationals, units, rationals, rationals, rationals)
def test_change_composition(coeffs, u1, r1, s1, w1, u2, r2, s2, w2):
    m = WeierstrassModel(*coeffs)
    c1 = AdmissibleChange(u1, r1, s1, w1)
    c2 = AdmissibleChange(u2, r2, s2, w2)
    assert transform(transform(m, c1), c2) == transform(m, c1.then(c2))


def test_change_moves_points():
    m = WeierstrassModel(0, 0, 0, -1900650154752, 990015042347311104)
    P = (Q(222288), Q(760596480))
    ch = AdmissibleChange(Q(3, 2), 5, -1, 7)
    assert transform(m, ch).contains(ch.apply_to_point(P))


def test_valuation():
    assert valuation(36864, 2) == 12
    assert valuation(Q(8, 3), 3) == -1
    assert valuation(0, 5) == math.inf
    with pytest.raises(ValueError):
        valuation(10, 4)


def test_point_orders_on_families():
    assert point_order(build_ET("C5", (1, 2)), O) == 5
    assert multiply_point(build_ET("C5", (1, 2)), 5, O) is None
    assert point_order(build_ET("C7", (2, 1)), O) == 7


def test_example1_point_has_order_4():
    m = WeierstrassModel(0, 0, 0, -1900650154752, 990015042347311104)
    assert point_order(m, (Q(222288), Q(760596480))) == 4


def test_point_order_non_torsion_exceeds_bound():
    # (0, 0) on y^2 + y = x^3 - x generates the Mordell-Weil group
    m = WeierstrassModel(0, 0, 1, -1, 0)
    assert point_order(m, O) is None
    assert point_order(m, O, bound=50) is None


def test_point_order_checks_input():
    with pytest.raises(SingularModelError):
        point_order(WeierstrassModel(0, 0, 0, 0, 0), O)
    with pytest.raises(ValueError):
        point_order(WeierstrassModel(0, 0, 1, -1, 0), (Q(1), Q(1)))


def test_group_law_associativity_on_rank_one_curve():
    m = WeierstrassModel(0, 0, 1, -1, 0)
    P = O
    Q2 = multiply_point(m, 2, P)
    R = multiply_point(m, -3, P)
    assert add_points(m, add_points(m, P, Q2), R) == add_points(m, P, add_points(m, Q2, R))
    assert add_points(m, P, negate_point(m, P)) is None
    assert multiply_point(m, 7, P) == add_points(m, multiply_point(m, 3, P),
                                                 multiply_point(m, 4, P))
    for k in range(-5, 6):
        assert m.contains(multiply_point(m, k, P))
