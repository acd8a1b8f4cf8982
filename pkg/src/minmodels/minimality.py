"""Global minimal models.

Two independent routes are provided.  The table route reads the scaling
factor u_T straight off the family parameters (2-adic congruences, plus the
cube/square decomposition of a for C3 and C4).  The Laska-Kraus-Connell
route works from (c4, c6) of an arbitrary integral model and knows nothing
about the families; the test-suite uses it as the oracle for the first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .arith import FactoredInteger, factor, merge_factorizations
from .core import (AdmissibleChange, SingularModelError, WeierstrassModel,
                   invariants, require_nonsingular, transform, v2, valuation)
from .families import (TorsionFamily, as_family, build_ET, family_invariants,
                       gamma_factored)
from .normalization import CanonicalParams, canonicalize, require_canonical

F = TorsionFamily


@dataclass(frozen=True)
class MinimalityResult:
    uT: int
    minimal_model: WeierstrassModel
    min_discriminant: int
    min_c4: int
    min_c6: int
    branch: str
    _factored: Optional[FactoredInteger] = field(default=None, repr=False, compare=False)

    @property
    def min_discriminant_factored(self) -> FactoredInteger:
        if self._factored is not None:
            return self._factored
        f = factor(self.min_discriminant)
        object.__setattr__(self, "_factored", f)
        return f


def _u_c2(a: int, b: int, d: int) -> tuple[int, str]:
    diff = v2(b * b * d - a * a)
    va, vb = v2(a), v2(b)
    if va == 1 and vb == 1:
        if diff >= 8:
            if a % 8 == 2:
                return 4, "C2:u4:v2diff>=8,a=2(8)"
            return 2, "C2:u2:v2diff>=8,a=6(8)"
        if 4 <= diff <= 7:
            return 2, "C2:u2:4<=v2diff<=7,v2a=v2b=1"
    if vb >= 3 and a % 4 == 3:
        return 2, "C2:u2:v2b>=3,a=3(4)"
    return 1, "C2:u1"


def compute_uT(T: Union[str, TorsionFamily], params) -> tuple[int, str]:
    """The scaling factor u_T for canonical parameters, with the branch taken."""
    T = as_family(T)
    cp = require_canonical(T, params)
    a, b, d = cp.a, cp.b, cp.d
    if T is F.C2:
        return _u_c2(a, b, d)
    if T is F.C3:
        c, dd, _ = cp.decomposition
        return c * c * dd, "C3:u=c^2d"
    if T is F.C4:
        c, dd = cp.decomposition
        va = v2(a)
        if va >= 8 and va % 2 == 0 and (b * dd) % 4 == 3:
            return 2 * c, "C4:u=2c:v2a>=8even,bd=3(4)"
        return c, "C4:u=c"
    if T is F.C6:
        if v2(a + b) >= 3:
            return 2, "C6:u2:v2(a+b)>=3"
        return 1, "C6:u1"
    if T is F.C8:
        if v2(a) == 1:
            return 2, "C8:u2:v2a=1"
        return 1, "C8:u1"
    if T in (F.C10, F.C12):
        if a % 2 == 0:
            return 2, f"{T}:u2:a even"
        return 1, f"{T}:u1"
    if T is F.C2xC2:
        if v2(a) >= 4 and (b * d) % 4 == 1:
            return 2, "C2xC2:u2:v2a>=4,bd=1(4)"
        return 1, "C2xC2:u1"
    if T is F.C2xC4:
        va = v2(a)
        if va == 2 and v2(a + 4 * b) >= 4:
            return 4, "C2xC4:u4:v2a=2,v2(a+4b)>=4"
        if va >= 2:
            return 2, "C2xC4:u2:v2a>=2,v2(a+4b)<=3"
        return 1, "C2xC4:u1:v2a<=1"
    if T is F.C2xC6:
        v = v2(a + b)
        if v == 0:
            return 1, "C2xC6:u1:v2(a+b)=0"
        if v == 1:
            return 16, "C2xC6:u16:v2(a+b)=1"
        return 4, "C2xC6:u4:v2(a+b)>=2"
    if T is F.C2xC8:
        va = v2(a)
        if va == 0:
            return 1, "C2xC8:u1:v2a=0"
        if va == 1:
            return 16, "C2xC8:u16:v2a=1"
        return 64, "C2xC8:u64:v2a>=2"
    return 1, f"{T}:u1"


def minimal_discriminant(T: Union[str, TorsionFamily], params) -> FactoredInteger:
    """gamma_T / u_T^12, factored."""
    T = as_family(T)
    cp = require_canonical(T, params)
    u, _ = compute_uT(T, cp)
    g = gamma_factored(T, cp.params)
    uf = factor(u)
    exps = dict(g.factors)
    for p, e in uf.factors:
        exps[p] -= 12 * e
        if exps[p] < 0:
            raise ArithmeticError(f"u_T^12 does not divide gamma_T for {T}{cp.as_tuple()}")
    return FactoredInteger.from_dict(g.sign, exps)


def minimal_change(T: Union[str, TorsionFamily], params) -> AdmissibleChange:
    """The change (u_T, r_T, s_T, 0) taking E_T to a global minimal model."""
    T = as_family(T)
    cp = require_canonical(T, params)
    u, _ = compute_uT(T, cp)
    a, b = cp.a, cp.b
    r = s = 0
    if T is F.C2:
        if v2(b) >= 3 and a % 8 == 7:
            r = 1
        elif v2(b) >= 3 and a % 8 == 3:
            r = -3
        if v2(b) >= 3 and a % 4 == 3:
            s = 1
        elif u != 1 and v2(b) == 1:
            s = 2
    elif T is F.C2xC2 and u == 2:
        s = 1
    elif T is F.C4:
        c = cp.decomposition[0]
        if u == 2 * c:
            s = c
    return AdmissibleChange(u, r, s, 0)


def global_minimal_model(T: Union[str, TorsionFamily], params) -> WeierstrassModel:
    T = as_family(T)
    cp = require_canonical(T, params)
    m = transform(build_ET(T, cp.params), minimal_change(T, cp))
    if not m.is_integral():
        raise ArithmeticError(f"minimal model for {T}{cp.as_tuple()} is not integral: {m}")
    return m


def table_minimal(T: Union[str, TorsionFamily], params) -> MinimalityResult:
    """Everything the table route knows about the minimal model of E_T."""
    T = as_family(T)
    cp = require_canonical(T, params)
    u, branch = compute_uT(T, cp)
    fi = family_invariants(T, cp.params)
    dmin = minimal_discriminant(T, cp)
    c4, r4 = divmod(fi.alpha, u**4)
    c6, r6 = divmod(fi.beta, u**6)
    if r4 or r6:
        raise ArithmeticError(f"u_T does not scale (alpha, beta) integrally for {T}")
    return MinimalityResult(u, global_minimal_model(T, cp), dmin.value, c4, c6, branch, dmin)


# Kraus's criterion and the Laska-Kraus-Connell reduction.

def _kraus_at_3(c6: int) -> bool:
    return valuation(c6, 3) != 2


def _kraus_at_2(c4: int, c6: int) -> bool:
    return c6 % 4 == 3 or (valuation(c4, 2) >= 4 and c6 % 32 in (0, 8))


def kraus_admissible(c4: int, c6: int) -> bool:
    """Whether (c4, c6) are the invariants of some integral Weierstrass model."""
    num = c4**3 - c6**2
    if num == 0:
        raise ValueError("c4^3 - c6^2 = 0: not the invariants of an elliptic curve")
    if num % 1728:
        raise ValueError("1728 does not divide c4^3 - c6^2")
    return _kraus_at_3(c6) and _kraus_at_2(c4, c6)


def model_from_c4c6(c4: int, c6: int) -> WeierstrassModel:
    """An integral model with the given Kraus-admissible invariants."""
    b2 = (-c6) % 12
    if b2 > 6:
        b2 -= 12
    b4, r4 = divmod(b2 * b2 - c4, 24)
    b6, r6 = divmod(-b2**3 + 36 * b2 * b4 - c6, 216)
    a1 = b2 % 2
    a3 = b6 % 2
    a2, r2 = divmod(b2 - a1, 4)
    a4, r4b = divmod(b4 - a1 * a3, 2)
    a6, r6b = divmod(b6 - a3, 4)
    if r4 or r6 or r2 or r4b or r6b:
        raise ValueError(f"({c4}, {c6}) is not Kraus admissible")
    m = WeierstrassModel(a1, a2, a3, a4, a6)
    inv = invariants(m)
    assert (inv.c4, inv.c6) == (c4, c6)
    return m


def _scaling_candidates(c4: int, c6: int) -> dict[int, int]:
    """Largest e_p with p^(4e) | c4, p^(6e) | c6 and p^(12e) | Delta."""
    g = abs(math.gcd(c4, c6))
    disc = (c4**3 - c6**2) // 1728
    out = {}
    if g == 1:
        return out
    for p in factor(g).primes:
        # c4 or c6 may be 0, with infinite valuation; disc never is
        e = valuation(disc, p) // 12
        if c4:
            e = min(e, valuation(c4, p) // 4)
        if c6:
            e = min(e, valuation(c6, p) // 6)
        if e:
            out[p] = int(e)
    return out


def lkc_minimal_model(m: WeierstrassModel) -> MinimalityResult:
    """Global minimal model of an arbitrary integral model, via (c4, c6) only."""
    if not m.is_integral():
        raise ValueError(f"model {m} is not integral")
    inv = require_nonsingular(m)
    c4, c6 = inv.c4.numerator, inv.c6.numerator
    u = 1
    for p, e in sorted(_scaling_candidates(c4, c6).items()):
        if p in (2, 3):
            while e > 0:
                q = p**e
                c4p, c6p = c4 // q**4, c6 // q**6
                ok = _kraus_at_2(c4p, c6p) if p == 2 else _kraus_at_3(c6p)
                if ok:
                    break
                e -= 1
        u *= p**e
    c4m, c6m = c4 // u**4, c6 // u**6
    if not kraus_admissible(c4m, c6m):
        raise ArithmeticError("scaled invariants failed Kraus's criterion")
    minimal = model_from_c4c6(c4m, c6m)
    dmin = (c4m**3 - c6m**2) // 1728
    return MinimalityResult(u, minimal, dmin, c4m, c6m, "lkc")


# Frey curves y^2 = x(x + a)(x + b).

def frey_model(a: int, b: int) -> WeierstrassModel:
    return WeierstrassModel(0, a + b, 0, a * b, 0)


def frey_closed_form_u(a: int, b: int) -> int:
    """The closed-form scaling rule: 2 when 16 | a and b = 1 mod 4, else 1."""
    return 2 if a % 16 == 0 and b % 4 == 1 else 1


def frey_minimal(a: int, b: int) -> MinimalityResult:
    """Minimal model of y^2 = x(x + a)(x + b) for coprime a, b with ab(a - b) != 0.

    When a is even the closed-form rule applies verbatim and the result is
    F(a, b) itself or y^2 + xy = x^3 + (a+b-1)/4 x^2 + ab/16 x.  Otherwise
    the curve is first relabelled into canonical C2xC2 form, where the rule
    is applied to the relabelled pair.
    """
    if math.gcd(a, b) != 1:
        raise ValueError("Frey parameters must be coprime")
    if a * b * (a - b) == 0:
        raise SingularModelError("singular: ab(a - b) = 0")
    cp = canonicalize(F.C2xC2, (a, b, 1))
    res = table_minimal(F.C2xC2, cp)
    if a % 2 == 0:
        u = frey_closed_form_u(a, b)
        assert u == res.uT, (a, b, u, res.uT)
        if u == 2:
            model = WeierstrassModel(1, (a + b - 1) // 4, 0, a * b // 16, 0)
        else:
            model = frey_model(a, b)
        assert invariants(model).discriminant == res.min_discriminant
        return MinimalityResult(u, model, res.min_discriminant, res.min_c4, res.min_c6,
                                "frey:" + res.branch, res.min_discriminant_factored)
    return MinimalityResult(res.uT, res.minimal_model, res.min_discriminant, res.min_c4,
                            res.min_c6, "frey:relabelled:" + res.branch,
                            res.min_discriminant_factored)
