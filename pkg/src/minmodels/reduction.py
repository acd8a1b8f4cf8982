"""Additive and semistable reduction of the torsion families.

additive_primes() reads the primes of additive reduction off the canonical
parameters; additive_primes_general() works on any integral model as the
primes dividing both c4 and Delta of a global minimal model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from .arith import prime_divisors
from .core import WeierstrassModel, v2, valuation
from .families import TorsionFamily, as_family
from .minimality import lkc_minimal_model, table_minimal
from .normalization import require_canonical

F = TorsionFamily

# Primes at which E_T can have additive reduction, for the families where
# this set is fixed in advance.
_FIXED_SETS = {
    F.C5: frozenset({5}), F.C6: frozenset({2, 3}), F.C7: frozenset({7}),
    F.C8: frozenset({2}), F.C9: frozenset({3}), F.C10: frozenset({5}),
    F.C12: frozenset({2, 3}), F.C2xC4: frozenset({2}), F.C2xC6: frozenset({2, 3}),
    F.C2xC8: frozenset({2}),
}


def fixed_additive_set(T: Union[str, TorsionFamily]) -> frozenset:
    """The fixed set of primes where E_T can have additive reduction (|T| > 4 only)."""
    T = as_family(T)
    if T not in _FIXED_SETS:
        raise ValueError(f"{T} has additive primes of unbounded size; no fixed set")
    return _FIXED_SETS[T]


@dataclass(frozen=True)
class ReductionReport:
    family: TorsionFamily
    additive: dict  # prime -> id of the condition that makes it additive
    semistable: bool
    semistable_row: str
    allowed_set: Optional[frozenset]  # None when |T| <= 4

    @property
    def primes(self) -> frozenset:
        return frozenset(self.additive)


def _odd_prime_support(*ns: int) -> set[int]:
    out: set[int] = set()
    for n in ns:
        if n:
            out.update(p for p in prime_divisors(n) if p != 2)
    return out


def _additive_rows(T: TorsionFamily, cp) -> dict[int, str]:
    a, b, d = cp.a, cp.b, cp.d
    rows: dict[int, str] = {}
    if T is F.C2:
        g = math.gcd(a, b * d)
        for p in _odd_prime_support(g):
            rows[p] = "C2:odd p | gcd(a,bd)"
        diff = v2(b * b * d - a * a)
        va, vb = v2(a), v2(b)
        if diff >= 8 and a % 8 == 6:
            rows[2] = "C2:2:v2diff>=8,a=6(8)"
        elif diff <= 7 and va == 1 and vb == 1:
            rows[2] = "C2:2:v2diff<=7,v2a=v2b=1"
        elif vb >= 3 and a % 4 != 3:
            rows[2] = "C2:2:v2b>=3,a!=3(4)"
        elif vb == 1 and va != 1:
            rows[2] = "C2:2:v2b=1,v2a!=1"
        elif vb in (0, 2):
            rows[2] = "C2:2:v2b in {0,2}"
    elif T is F.C3_0:
        for p in prime_divisors(a):
            rows[p] = "C3_0:v_p(a) in {1,2}"
        rows.setdefault(3, "C3_0:3:v3(a)=0")
    elif T is F.C3:
        for p in prime_divisors(a):
            if p != 3 and valuation(a, p) % 3:
                rows[p] = "C3:p!=3:v_p(a)!=0(3)"
        if a % 3 == 0:
            rows[3] = "C3:3:v3(a)>=1"
    elif T is F.C4:
        for p in prime_divisors(a):
            if valuation(a, p) % 2:
                rows[p] = "C4:v_p(a) odd"
        va = v2(a)
        if va in (2, 4, 6):
            rows[2] = "C4:2:v2a in {2,4,6}"
        elif va >= 8 and va % 2 == 0 and (b * d_of_c4(cp)) % 4 == 1:
            rows[2] = "C4:2:v2a>=8even,bd=1(4)"
    elif T is F.C5:
        if (a + 3 * b) % 5 == 0:
            rows[5] = "C5:5:v5(a+3b)>=1"
    elif T is F.C6:
        if v2(a + b) in (1, 2):
            rows[2] = "C6:2:v2(a+b) in {1,2}"
        if a % 3 == 0:
            rows[3] = "C6:3:v3(a)>=1"
    elif T is F.C7:
        if (a + 4 * b) % 7 == 0:
            rows[7] = "C7:7:v7(a+4b)>=1"
    elif T is F.C8:
        if v2(a) >= 2:
            rows[2] = "C8:2:v2a>=2"
    elif T is F.C9:
        if (a + b) % 3 == 0:
            rows[3] = "C9:3:v3(a+b)>=1"
    elif T is F.C10:
        if (a + b) % 5 == 0:
            rows[5] = "C10:5:v5(a+b)>=1"
    elif T is F.C12:
        if a % 3 == 0:
            rows[3] = "C12:3:v3(a)>=1"
    elif T is F.C2xC2:
        for p in _odd_prime_support(d):
            rows[p] = "C2xC2:odd p | d"
        if v2(a) in (1, 2, 3) or (b * d) % 4 != 1:
            rows[2] = "C2xC2:2:v2a in {1,2,3} or bd!=1(4)"
    elif T is F.C2xC4:
        if v2(a) >= 1 and v2(a + 4 * b) <= 3:
            rows[2] = "C2xC4:2:v2a>=1,v2(a+4b)<=3"
    elif T is F.C2xC6:
        if b % 3 == 0:
            rows[3] = "C2xC6:3:v3(b)>=1"
    return dict(sorted(rows.items()))


def d_of_c4(cp) -> int:
    """The squarefree part d of a = c^2 d for C4."""
    return cp.decomposition[1]


def _semistable_row(T: TorsionFamily, cp) -> tuple[bool, str]:
    a, b, d = cp.a, cp.b, cp.d
    if T is F.C2:
        g = math.gcd(a, b * d)
        if (g == 2 and v2(b * b * d - a * a) >= 8 and v2(a) == 1 and v2(b) == 1
                and a % 8 == 2):
            return True, "C2:gcd(a,bd)=2,v2diff>=8,a=2(8)"
        if g == 1 and v2(b) >= 3 and a % 4 == 3:
            return True, "C2:gcd(a,bd)=1,v2b>=3,a=3(4)"
        return False, "C2:not semistable"
    if T is F.C3_0:
        return False, "C3_0:never"
    if T is F.C3:
        c, dd, e = cp.decomposition
        if dd == 1 and e == 1 and a % 3:
            return True, "C3:a cube,v3(a)=0"
        return False, "C3:not semistable"
    if T is F.C4:
        c, dd = cp.decomposition
        if dd == 1 and a % 2:
            return True, "C4:a odd square"
        if dd == 1 and v2(a) >= 8 and b % 4 == 3:
            return True, "C4:a square,v2a>=8,b=3(4)"
        return False, "C4:not semistable"
    if T is F.C5:
        return (a + 3 * b) % 5 != 0, "C5:v5(a+3b)=0"
    if T is F.C6:
        return a % 3 != 0 and v2(a + b) not in (1, 2), "C6:v3(a)=0,v2(a+b) not in {1,2}"
    if T is F.C7:
        return (a + 4 * b) % 7 != 0, "C7:v7(a+4b)=0"
    if T is F.C8:
        return v2(a) <= 1, "C8:v2a<=1"
    if T is F.C9:
        return (a + b) % 3 != 0, "C9:v3(a+b)=0"
    if T is F.C10:
        return (a + b) % 5 != 0, "C10:v5(a+b)=0"
    if T is F.C12:
        return a % 3 != 0, "C12:v3(a)=0"
    if T is F.C2xC2:
        return d == 1 and v2(a) >= 4 and b % 4 == 1, "C2xC2:d=1,v2a>=4,b=1(4)"
    if T is F.C2xC4:
        if a % 2:
            return True, "C2xC4:a odd"
        return v2(a) == 2 and v2(a + 4 * b) >= 4, "C2xC4:v2a=2,v2(a+4b)>=4"
    if T is F.C2xC6:
        return b % 3 != 0, "C2xC6:v3(b)=0"
    if T is F.C2xC8:
        return True, "C2xC8:always"
    raise ValueError(T)


def is_semistable(T: Union[str, TorsionFamily], params) -> tuple[bool, str]:
    T = as_family(T)
    return _semistable_row(T, require_canonical(T, params))


def additive_primes(T: Union[str, TorsionFamily], params) -> ReductionReport:
    T = as_family(T)
    cp = require_canonical(T, params)
    rows = _additive_rows(T, cp)
    semi, row = _semistable_row(T, cp)
    return ReductionReport(T, rows, semi, row, _FIXED_SETS.get(T))


def additive_primes_general(m: WeierstrassModel) -> frozenset:
    """Primes of additive reduction of any integral model (via its minimal model)."""
    res = lkc_minimal_model(m)
    g = math.gcd(res.min_c4, res.min_discriminant)
    if g in (0, 1):
        return frozenset()
    return frozenset(prime_divisors(g))


def minimal_invariants_odd(T: Union[str, TorsionFamily], params) -> bool:
    """True iff c4 and c6 of the global minimal model are both odd.

    Only defined for T in {C7, C9, C10, C12, C2xC6, C2xC8}.
    """
    T = as_family(T)
    if T not in (F.C7, F.C9, F.C10, F.C12, F.C2xC6, F.C2xC8):
        raise ValueError(f"the parity statement does not cover {T}")
    res = table_minimal(T, require_canonical(T, params))
    return res.min_c4 % 2 == 1 and res.min_c6 % 2 == 1
