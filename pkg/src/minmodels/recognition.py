"""Recognise which family a curve with a marked torsion point belongs to.

Points of order N >= 4 go through the Tate normal form
y^2 + (1-g)xy - fy = x^3 - fx^2 and the parameter t is recovered exactly by
intersecting the rational roots of f(t) = f0 and g(t) = g0.  Orders 2 and 3
are handled directly from the shape of the model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .arith import divisors, integer_sqrt_exact, squarefree_decompose
from .core import (AdmissibleChange, Point, WeierstrassModel, add_points,
                   invariants, point_order, require_nonsingular, transform)
from .families import TorsionFamily, as_family, tate_fg
from .normalization import CanonicalParams, canonicalize

F = TorsionFamily


class RecognitionError(ValueError):
    """The marked point does not determine a supported family."""


@dataclass(frozen=True)
class TateNormalForm:
    f: Fraction
    g: Fraction
    change: AdmissibleChange  # from the input model to the Tate normal form

    @property
    def model(self) -> WeierstrassModel:
        return WeierstrassModel(1 - self.g, -self.f, -self.f, 0, 0)


@dataclass(frozen=True)
class Identification:
    family: TorsionFamily
    params: CanonicalParams
    order: int
    t: Optional[Fraction] = None
    tnf: Optional[TateNormalForm] = None


def translate_to_origin(m: WeierstrassModel, P: Point) -> WeierstrassModel:
    return transform(m, _translation(m, P))


def _translation(m: WeierstrassModel, P: Point) -> AdmissibleChange:
    if P is None:
        raise ValueError("cannot translate the point at infinity to the origin")
    if not m.contains(P):
        raise ValueError(f"point {P} is not on {m}")
    x0, y0 = P
    return AdmissibleChange(1, x0, 0, y0)


def _kill_a4(m: WeierstrassModel) -> AdmissibleChange:
    """With P at the origin and a3 != 0, y -> y + sx with s = a4/a3 clears a4."""
    return AdmissibleChange(1, 0, m.a4 / m.a3, 0)


def tate_normal_form(m: WeierstrassModel, P: Point, N: Optional[int] = None) -> TateNormalForm:
    order = point_order(m, P)
    if order is None:
        raise RecognitionError("point is not torsion (order exceeds 12)")
    if N is not None and N != order:
        raise ValueError(f"point has order {order}, not {N}")
    if order < 4:
        raise ValueError(f"Tate normal form needs order >= 4, got {order}")
    ch = _translation(m, P)
    m1 = transform(m, ch)
    step = _kill_a4(m1)
    ch = ch.then(step)
    m2 = transform(m1, step)
    # now y^2 + a1 xy + a3 y = x^3 + a2 x^2; scale so that a2 = a3
    step = AdmissibleChange(m2.a3 / m2.a2)
    ch = ch.then(step)
    m3 = transform(m2, step)
    assert m3.a2 == m3.a3 and m3.a4 == 0 and m3.a6 == 0
    return TateNormalForm(-m3.a3, 1 - m3.a1, ch)


# Exact polynomial arithmetic over Q (coefficient lists, lowest degree first).

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(p: list, q: list) -> list:
    n = max(len(p), len(q))
    p = p + [Fraction(0)] * (n - len(p))
    q = q + [Fraction(0)] * (n - len(q))
    return _trim([x - y for x, y in zip(p, q)])


def _poly_scale(p: list, c) -> list:
    return _trim([x * c for x in p])


def _poly_mod(p: list, q: list) -> list:
    p = list(p)
    while len(p) >= len(q) and p:
        c = p[-1] / q[-1]
        shift = len(p) - len(q)
        for i, qc in enumerate(q):
            p[shift + i] -= c * qc
        _trim(p)
    return p


def _poly_gcd(p: list, q: list) -> list:
    while q:
        p, q = q, _poly_mod(p, q)
    return _poly_scale(p, 1 / p[-1]) if p else p


def _poly_eval(p: list, x: Fraction) -> Fraction:
    v = Fraction(0)
    for c in reversed(p):
        v = v * x + c
    return v


def _rational_roots(p: list) -> list[Fraction]:
    """All rational roots of a nonzero polynomial with rational coefficients."""
    p = _trim([Fraction(c) for c in p])
    if not p:
        raise ValueError("zero polynomial")
    roots = []
    if p[0] == 0:
        roots.append(Fraction(0))
        while p[0] == 0:
            p = p[1:]
    if len(p) == 1:
        return roots
    lcm = 1
    for c in p:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if len(ints) == 2:
        roots.append(Fraction(-ints[0], ints[1]))
        return sorted(set(roots))
    if len(ints) == 3:
        c0, c1, c2 = ints
        s = integer_sqrt_exact(c1 * c1 - 4 * c2 * c0)
        if s is not None:
            roots.extend({Fraction(-c1 + s, 2 * c2), Fraction(-c1 - s, 2 * c2)})
        return sorted(set(roots))
    lead, const = ints[-1], ints[0]
    at_one, at_minus_one = sum(ints), sum(c * (-1) ** i for i, c in enumerate(ints))
    for q in divisors(lead):
        for num in divisors(const):
            for pnum in (num, -num):
                if math.gcd(pnum, q) != 1:
                    continue
                # cheap necessary conditions before the exact evaluation
                if at_one and (q - pnum) and at_one % (q - pnum):
                    continue
                if at_minus_one and (q + pnum) and at_minus_one % (q + pnum):
                    continue
                x = Fraction(pnum, q)
                if _poly_eval(p, x) == 0:
                    roots.append(x)
    return sorted(set(roots))


def _numerator_poly(T: TorsionFamily, target: Fraction, which: int) -> list:
    """num(t) - target * den(t) for f (which=0) or g (which=1); [] if identically 0."""
    num, den = _RATIONAL_FORMS[T][which]
    return _poly_sub(list(map(Fraction, num)), _poly_scale(list(map(Fraction, den)), target))


# Table of f(t) and g(t) as (numerator, denominator), coefficients lowest first.
_RATIONAL_FORMS = {
    F.C4: (([0, 1], [1]), ([0], [1])),
    F.C5: (([0, 1], [1]), ([0, 1], [1])),
    F.C6: (([0, 1, 1], [1]), ([0, 1], [1])),
    F.C7: (([0, 0, -1, 1], [1]), ([0, -1, 1], [1])),
    F.C8: (([1, -3, 2], [1]), ([1, -3, 2], [0, 1])),
    F.C9: (([0, 0, -1, 2, -2, 1], [1]), ([0, 0, -1, 1], [1])),
    F.C10: (([0, 0, 0, 1, -3, 2], [1, -6, 11, -6, 1]), ([0, -1, 3, -2], [1, -3, 1])),
    F.C12: (([0, -1, 7, -21, 34, -30, 12], [1, -4, 6, -4, 1]),
            ([0, 1, -5, 9, -6], [-1, 3, -3, 1])),
    F.C2xC4: (([0, 1, 4], [1]), ([0], [1])),
    F.C2xC6: (([10, -22, 14, -2], [81, 0, -18, 0, 1]), ([10, -2], [-9, 0, 1])),
    F.C2xC8: (([1, 6, 16, 16], [1, 0, -16, 0, 64]), ([1, 6, 16, 16], [0, -2, -8, 16, 64])),
}


def recover_t_all(T: Union[str, TorsionFamily], tnf: TateNormalForm) -> list[Fraction]:
    """Every rational t with (f(t), g(t)) equal to the Tate normal form's (f, g)."""
    T = as_family(T)
    if T not in _RATIONAL_FORMS:
        raise ValueError(f"{T} has no Tate-normal-form parametrization")
    pf = _numerator_poly(T, tnf.f, 0)
    pg = _numerator_poly(T, tnf.g, 1)
    if not pf and not pg:
        raise RecognitionError("degenerate Tate normal form")
    if not pg:
        common = pf
    elif not pf:
        common = pg
    else:
        common = _poly_gcd(pf, pg)
    if not common or len(common) == 1:
        return []
    out = []
    for t in _rational_roots(common):
        try:
            if tate_fg(T, t) == (tnf.f, tnf.g):
                out.append(t)
        except ValueError:
            continue
    return out


def _t_key(t: Fraction):
    return (t.denominator, abs(t.numerator), t.numerator)


def recover_t(T: Union[str, TorsionFamily], tnf: TateNormalForm) -> Fraction:
    roots = recover_t_all(T, tnf)
    if not roots:
        raise RecognitionError(f"no rational t puts this Tate normal form in family {as_family(T)}")
    return min(roots, key=_t_key)


_CYCLIC = {4: F.C4, 5: F.C5, 6: F.C6, 7: F.C7, 8: F.C8, 9: F.C9, 10: F.C10, 12: F.C12}
_FULL_TWO = {4: F.C2xC4, 6: F.C2xC6, 8: F.C2xC8}


def has_full_two_torsion(m: WeierstrassModel) -> bool:
    """Whether all three 2-torsion points are rational, for a curve known
    to have one rational 2-torsion point (the 2-division cubic then splits
    exactly when its discriminant 16 * Delta is a square)."""
    disc = invariants(m).discriminant
    if disc <= 0:
        return False
    return (integer_sqrt_exact(disc.numerator) is not None
            and integer_sqrt_exact(disc.denominator) is not None)


def _params_from_t(T: TorsionFamily, t: Fraction) -> CanonicalParams:
    return canonicalize(T, (t.denominator, t.numerator))


def identify(m: WeierstrassModel, P: Point, prefer_full_torsion: bool = False,
             family: Union[str, TorsionFamily, None] = None) -> Identification:
    """Find (T, canonical parameters) with (m, P) isomorphic to (E_T, (0, 0)).

    By default a point of order 4, 6 or 8 is reported in the cyclic family
    C_N even when the curve also has full 2-torsion; prefer_full_torsion
    asks for C2 x C_N instead whenever that is possible.  Passing family
    forces the attempt on one specific family.
    """
    require_nonsingular(m)
    if P is not None and not m.contains(P):
        raise ValueError(f"point {P} is not on {m}")
    N = point_order(m, P)
    if N is None:
        raise RecognitionError("point is not torsion (order exceeds 12)")
    if N == 1:
        raise RecognitionError("the point at infinity carries no torsion information")
    wanted = as_family(family) if family is not None else None
    if wanted is not None and wanted.point_order != N:
        raise RecognitionError(f"point has order {N}, but {wanted} marks a point of order "
                               f"{wanted.point_order}")
    if N == 2:
        return _identify_order_2(m, P, wanted)
    if N == 3:
        return _identify_order_3(m, P, wanted)
    tnf = tate_normal_form(m, P, N)
    if wanted is not None:
        candidates = [wanted]
    else:
        candidates = [_CYCLIC[N]]
        if N in _FULL_TWO and has_full_two_torsion(m):
            if prefer_full_torsion:
                candidates.insert(0, _FULL_TWO[N])
    for T in candidates:
        roots = recover_t_all(T, tnf)
        if roots:
            t = min(roots, key=_t_key)
            return Identification(T, _params_from_t(T, t), N, t, tnf)
    raise RecognitionError(f"no family with a point of order {N} matches")


def _identify_order_3(m, P, wanted) -> Identification:
    m1 = translate_to_origin(m, P)
    m2 = transform(m1, _kill_a4(m1))
    assert m2.a2 == 0 and m2.a4 == 0 and m2.a6 == 0
    if m2.a1 != 0 and wanted is not F.C3_0:
        t = m2.a3 / m2.a1**3
        return Identification(F.C3, _params_from_t(F.C3, t), 3, t)
    if m2.a1 != 0:
        raise RecognitionError("a1 != 0: the curve has j != 0 and is not in C3_0")
    if wanted is F.C3:
        raise RecognitionError("a1 = 0: the curve lies in C3_0, not C3")
    # y^2 + a3 y = x^3; x -> x/q^2, y -> y/q^3 makes a3 = p q^2 integral
    a3 = m2.a3
    a = a3.numerator * a3.denominator**2
    return Identification(F.C3_0, canonicalize(F.C3_0, (a,)), 3)


def _identify_order_2(m, P, wanted) -> Identification:
    m1 = translate_to_origin(m, P)
    assert m1.a3 == 0 and m1.a6 == 0
    # complete the square: y -> y - a1 x / 2
    m2 = transform(m1, AdmissibleChange(1, 0, -m1.a1 / 2, 0))
    A, B = m2.a2, m2.a4
    # clear denominators: x -> x / L^2 multiplies a2 by L^2 and a4 by L^4
    L = A.denominator * B.denominator
    A, B = A * L * L, B * L**4
    if A.numerator % 2:
        A, B = 4 * A, 16 * B
    A, B = A.numerator, B.numerator
    disc = A * A - 4 * B
    root = integer_sqrt_exact(disc)
    if root is not None and wanted is not F.C2:
        # y^2 = x(x + alpha)(x + beta) with alpha, beta integers
        alpha, beta = (A + root) // 2, (A - root) // 2
        return Identification(F.C2xC2, canonicalize(F.C2xC2, (alpha, beta, 1)), 2)
    if root is not None:
        raise RecognitionError("the curve has full 2-torsion; use C2xC2")
    if wanted is F.C2xC2:
        raise RecognitionError("the curve does not have full 2-torsion")
    a = A // 2
    k, dd = squarefree_decompose(a * a - B)
    return Identification(F.C2, canonicalize(F.C2, (a, k, dd)), 2)
