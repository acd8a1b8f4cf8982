import math
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from minmodels.core import AdmissibleChange, WeierstrassModel, invariants, transform
from minmodels.families import AB_FAMILIES, ALL_FAMILIES, TorsionFamily as T
from minmodels.minimality import (compute_uT, frey_closed_form_u, frey_minimal, frey_model,
                                  global_minimal_model, kraus_admissible, lkc_minimal_model,
                                  minimal_discriminant, model_from_c4c6, table_minimal)
from minmodels.normalization import canonicalize
from minmodels.sweep import grid


def test_frey_model_shape():
    assert frey_model(16, 1).coeffs == (0, 17, 0, 16, 0)
    assert frey_closed_form_u(16, 1) == 2
    assert frey_closed_form_u(16, 3) == 1


def test_frey_even_a_uses_closed_form():
    res = frey_minimal(16, 1)
    assert res.uT == 2
    assert res.minimal_model.coeffs == (1, 4, 0, 1, 0)
    assert res.min_discriminant == 225


def test_frey_odd_a_can_still_scale():
    # y^2 = x(x - 1)(x + 15): a odd, yet not minimal
    res = frey_minimal(1, 16)
    orc = lkc_minimal_model(frey_model(1, 16))
    assert res.uT == orc.uT == 2
    assert res.min_discriminant == orc.min_discriminant


def test_c2xc2_example():
    cp = canonicalize("C2xC2", (16, 1, 1))
    res = table_minimal("C2xC2", cp)
    assert res.uT == 2 and res.min_discriminant == 225


def test_c2xc2_six_one():
    res = table_minimal("C2xC2", canonicalize("C2xC2", (6, 1, 1)))
    assert res.uT == 1 and res.min_discriminant == 14400


def test_example_1():
    res = table_minimal("C4", canonicalize("C4", (36864, 4585)))
    assert res.uT == 192
    assert res.minimal_model.coeffs == (192, -4585, -880320, 0, 0)
    assert res.min_discriminant_factored.factors == (
        (2, 16), (3, 2), (5, 4), (7, 4), (83, 2), (131, 4))


def test_example_2():
    res = table_minimal("C12", canonicalize("C12", (6, 11)))
    assert res.uT == 2
    assert res.minimal_model.coeffs == (18063, -32280600, -12105225000, 0, 0)
    assert minimal_discriminant("C12", (6, 11)).value == res.min_discriminant


def test_kraus():
    assert kraus_admissible(0, -216)
    assert not kraus_admissible(0, 72)
    with pytest.raises(ValueError):
        kraus_admissible(1, 1)
    with pytest.raises(ValueError):
        kraus_admissible(0, 0)


@settings(max_examples=200, deadline=None)
@given(st.tuples(*[st.integers(-50, 50)] * 5))
def test_model_from_c4c6_recovers_invariants(coeffs):
    inv = invariants(WeierstrassModel(*coeffs))
    assume(inv.discriminant != 0)
    m = model_from_c4c6(int(inv.c4), int(inv.c6))
    assert m.is_integral()
    i2 = invariants(m)
    assert (i2.c4, i2.c6) == (inv.c4, inv.c6)


@settings(max_examples=150, deadline=None)
@given(st.tuples(*[st.integers(-30, 30)] * 5), st.integers(1, 12),
       st.tuples(*[st.integers(-20, 20)] * 3))
def test_lkc_invariant_under_rescaling(coeffs, u, rsw):
    m = WeierstrassModel(*coeffs)
    assume(invariants(m).discriminant != 0)
    base = lkc_minimal_model(m)
    # y -> u^3 y etc. with integral r, s, w keeps the scaled model integral
    bigger = transform(m, AdmissibleChange(Fraction(1, u), *rsw))
    assert bigger.is_integral()
    res = lkc_minimal_model(bigger)
    assert (res.min_c4, res.min_c6, res.min_discriminant) == (
        base.min_c4, base.min_c6, base.min_discriminant)
    assert res.uT == base.uT * u


@pytest.mark.parametrize("fam", ALL_FAMILIES, ids=str)
def test_table_matches_oracle_on_small_grid(fam):
    for p in grid(fam, 8, 5, extras=True):
        res = table_minimal(fam, p)
        assert global_minimal_model(fam, p) == res.minimal_model
        orc = lkc_minimal_model(res.minimal_model)
        assert orc.uT == 1, (fam, p)
        assert (orc.min_c4, orc.min_c6) == (res.min_c4, res.min_c6)


EXPECTED_BRANCHES = {
    T.C2: {"C2:u4:v2diff>=8,a=2(8)", "C2:u2:v2diff>=8,a=6(8)",
           "C2:u2:4<=v2diff<=7,v2a=v2b=1", "C2:u2:v2b>=3,a=3(4)", "C2:u1"},
    T.C4: {"C4:u=2c:v2a>=8even,bd=3(4)", "C4:u=c"},
    T.C6: {"C6:u2:v2(a+b)>=3", "C6:u1"},
    T.C8: {"C8:u2:v2a=1", "C8:u1"},
    T.C10: {"C10:u2:a even", "C10:u1"},
    T.C12: {"C12:u2:a even", "C12:u1"},
    T.C2xC2: {"C2xC2:u2:v2a>=4,bd=1(4)", "C2xC2:u1"},
    T.C2xC4: {"C2xC4:u4:v2a=2,v2(a+4b)>=4", "C2xC4:u2:v2a>=2,v2(a+4b)<=3",
              "C2xC4:u1:v2a<=1"},
    T.C2xC6: {"C2xC6:u1:v2(a+b)=0", "C2xC6:u16:v2(a+b)=1", "C2xC6:u4:v2(a+b)>=2"},
    T.C2xC8: {"C2xC8:u1:v2a=0", "C2xC8:u16:v2a=1", "C2xC8:u64:v2a>=2"},
}


@pytest.mark.parametrize("fam", list(EXPECTED_BRANCHES), ids=str)
def test_every_branch_is_reached_by_the_grid(fam):
    seen = {compute_uT(fam, p)[1] for p in grid(fam, 30, 10, extras=True)}
    assert EXPECTED_BRANCHES[fam] <= seen


def test_minimal_change_produces_integral_model_for_c4_large_square():
    cp = canonicalize("C4", (256, 3))
    res = table_minimal("C4", cp)
    assert res.uT == 32 and res.minimal_model.is_integral()
