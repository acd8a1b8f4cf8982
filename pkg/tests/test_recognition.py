from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from minmodels.core import WeierstrassModel, invariants, transform
from minmodels.families import ALL_FAMILIES, TorsionFamily as T, build_ET, universal_curve
from minmodels.recognition import (RecognitionError, has_full_two_torsion, identify,
                                   recover_t, recover_t_all, tate_normal_form,
                                   translate_to_origin)

Q = Fraction
O = (Q(0), Q(0))
TNF_FAMILIES = [f for f in ALL_FAMILIES if f.point_order >= 4]


def test_translate_to_origin():
    m = translate_to_origin(WeierstrassModel(0, 0, 0, -1, 0), (Q(1), Q(0)))
    assert m.coeffs == (0, 3, 0, 2, 0)


def test_translate_rejects_points_off_the_curve():
    with pytest.raises(ValueError):
        translate_to_origin(WeierstrassModel(0, 0, 0, -1, 0), (Q(2), Q(0)))


def test_tate_normal_form_c5():
    tnf = tate_normal_form(build_ET("C5", (1, 2)), O)
    assert (tnf.f, tnf.g) == (2, 2)
    assert transform(build_ET("C5", (1, 2)), tnf.change) == tnf.model


def test_recover_t_examples():
    tnf = tate_normal_form(universal_curve("C12", Q(11, 6)), O)
    assert recover_t("C12", tnf) == Q(11, 6)
    tnf = tate_normal_form(universal_curve("C4", Q(4585, 36864)), O)
    assert recover_t("C4", tnf) == Q(4585, 36864)


def test_identify_example1_default_and_full_torsion():
    m = WeierstrassModel(0, 0, 0, -1900650154752, 990015042347311104)
    P = (Q(222288), Q(760596480))
    ident = identify(m, P)
    assert ident.family is T.C4 and ident.params.as_tuple() == (36864, 4585)
    full = identify(m, P, prefer_full_torsion=True)
    assert full.family is T.C2xC4
    assert has_full_two_torsion(m)


def test_identify_order_two():
    ident = identify(WeierstrassModel(0, 7, 0, 6, 0), O)
    assert ident.family is T.C2xC2 and ident.params.as_tuple() == (6, 1, 1)
    ident = identify(build_ET("C2", (3, 2, 3)), O)
    assert ident.family is T.C2 and ident.params.as_tuple() == (3, 2, 3)


def test_identify_order_three():
    assert identify(WeierstrassModel(0, 0, 1, 0, 0), O).family is T.C3_0
    ident = identify(build_ET("C3", (4, 3)), O)
    assert ident.family is T.C3 and ident.params.as_tuple() == (4, 3)


def test_identify_errors():
    rank_one = WeierstrassModel(0, 0, 1, -1, 0)
    with pytest.raises(RecognitionError):
        identify(rank_one, O)
    with pytest.raises(RecognitionError):
        identify(rank_one, None)
    with pytest.raises(ValueError):
        identify(rank_one, (Q(5), Q(5)))
    with pytest.raises(RecognitionError):
        identify(build_ET("C5", (1, 2)), O, family="C7")


@pytest.mark.parametrize("fam", TNF_FAMILIES, ids=str)
@settings(max_examples=30, deadline=None)
@given(num=st.integers(-60, 60), den=st.integers(1, 60))
def test_recover_t_finds_t(fam, num, den):
    t = Q(num, den)
    try:
        X = universal_curve(fam, t)
    except ValueError:
        return
    assume(invariants(X).discriminant != 0)
    assert t in recover_t_all(fam, tate_normal_form(X, O))


@pytest.mark.parametrize("fam", ALL_FAMILIES, ids=str)
@settings(max_examples=25, deadline=None)
@given(a=st.integers(1, 80), b=st.integers(-80, 80))
def test_identify_round_trip(fam, a, b):
    from minmodels.normalization import canonicalize
    from minmodels.sweep import check_round_trip
    raw = {1: (a,), 2: (a, b), 3: (a, b, 3 if fam is T.C2 else 1)}[fam.arity]
    try:
        cp = canonicalize(fam, raw)
    except ValueError:
        return
    assert check_round_trip(fam, cp.as_tuple()) is None
