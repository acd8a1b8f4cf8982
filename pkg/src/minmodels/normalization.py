"""Canonical parameters for the torsion families.

Every nonsingular E_T(raw) is Q-isomorphic to E_T at a canonical tuple:

* two-parameter families: gcd(a, b) = 1 and a > 0;
* C3_0: a > 0 and cubefree;
* C2: b != 0, d squarefree and != 1, gcd(a, b) squarefree;
* C2xC2: gcd(a, b) = 1, a even, a != b, d > 0 squarefree.

canonicalize() also returns the admissible change taking build_ET(T, raw)
to build_ET(T, canonical), so callers can move points across.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from .arith import (FactoredInteger, cube_decompose, cube_square_decompose, factor,
                    is_squarefree, square_decompose, squarefree_decompose)
from .core import IDENTITY, AdmissibleChange, SingularModelError
from .families import (FamilyParams, TorsionFamily, as_family, as_params,
                       family_invariants)

__all__ = [
    "CanonicalParams", "NotCanonicalError", "canonicalize", "is_canonical",
    "factor", "FactoredInteger", "squarefree_decompose", "cube_square_decompose",
]


class NotCanonicalError(ValueError):
    pass


@dataclass(frozen=True)
class CanonicalParams:
    family: TorsionFamily
    params: FamilyParams
    # (c, d, e) with a = c^3 d^2 e for C3, (c, d) with a = c^2 d for C4.
    decomposition: Optional[tuple[int, ...]] = None
    change: AdmissibleChange = IDENTITY

    @property
    def a(self) -> int:
        return self.params.a

    @property
    def b(self) -> Optional[int]:
        return self.params.b

    @property
    def d(self) -> Optional[int]:
        return self.params.d

    def as_tuple(self) -> tuple[int, ...]:
        return self.params.as_tuple()


def _decomposition(T: TorsionFamily, a: int) -> Optional[tuple[int, ...]]:
    if T is TorsionFamily.C3:
        return cube_square_decompose(a)
    if T is TorsionFamily.C4:
        return square_decompose(a)
    return None


def _weight(T: TorsionFamily) -> int:
    """Degree of a1 in (a, b); a_i is homogeneous of degree i * weight."""
    if T in (TorsionFamily.C7, TorsionFamily.C8, TorsionFamily.C2xC6):
        return 2
    if T in (TorsionFamily.C9, TorsionFamily.C10):
        return 3
    if T in (TorsionFamily.C12, TorsionFamily.C2xC8):
        return 4
    return 1


def _nonsingular(T: TorsionFamily, p: FamilyParams) -> None:
    if family_invariants(T, p).gamma == 0:
        raise SingularModelError(f"singular: gamma = 0 for {T}{p.as_tuple()}")


def canonicalize(T: Union[str, TorsionFamily], raw) -> CanonicalParams:
    T = as_family(T)
    p = as_params(T, raw)
    _nonsingular(T, p)
    if T is TorsionFamily.C3_0:
        return _canon_c3_0(p.a)
    if T is TorsionFamily.C2:
        return _canon_c2(p.a, p.b, p.d)
    if T is TorsionFamily.C2xC2:
        return _canon_c2xc2(p.a, p.b, p.d)
    a, b = p.a, p.b
    g = math.gcd(a, b)
    if a < 0:
        g = -g
    # E_T(g a', g b') is E_T(a', b') scaled by u = g^weight.
    a, b = a // g, b // g
    change = AdmissibleChange(g ** _weight(T)) if g != 1 else IDENTITY
    return CanonicalParams(T, FamilyParams(a, b), _decomposition(T, a), change)


def _canon_c3_0(a: int) -> CanonicalParams:
    k, m = cube_decompose(a)
    change = AdmissibleChange(k) if k != 1 else IDENTITY
    return CanonicalParams(TorsionFamily.C3_0, FamilyParams(m), None, change)


def _canon_c2(a: int, b: int, d: int) -> CanonicalParams:
    k, m = squarefree_decompose(d)
    if m == 1:
        raise ValueError("C2 with d a perfect square has full two-torsion; use C2xC2")
    # b only enters through b^2 d, so its sign is fixed to be positive
    b = abs(b * k)
    gsq, _ = squarefree_decompose(math.gcd(a, b))
    change = IDENTITY
    if gsq != 1:
        # x -> G^2 x divides a and b by G^2
        a, b = a // gsq**2, b // gsq**2
        change = AdmissibleChange(gsq)
    return CanonicalParams(TorsionFamily.C2, FamilyParams(a, b, m), None, change)


def _canon_c2xc2(a: int, b: int, d: int) -> CanonicalParams:
    # y^2 = x(x + A)(x + B) with A = ad, B = bd.
    A, B = a * d, b * d
    g, dd = squarefree_decompose(math.gcd(A, B))
    change = AdmissibleChange(g) if g != 1 else IDENTITY
    a, b, d = A // (g * g * dd), B // (g * g * dd), dd
    if a % 2 and b % 2:
        # x -> x - ad gives y^2 = x(x - ad)(x + (b - a)d)
        change = change.then(AdmissibleChange(1, -a * d))
        a, b = b - a, -a
    elif a % 2:
        a, b = b, a
    return CanonicalParams(TorsionFamily.C2xC2, FamilyParams(a, b, d), None, change)


def is_canonical(T: Union[str, TorsionFamily], params) -> bool:
    T = as_family(T)
    p = as_params(T, params)
    if family_invariants(T, p).gamma == 0:
        return False
    if T is TorsionFamily.C3_0:
        return p.a > 0 and cube_decompose(p.a) == (1, p.a)
    if T is TorsionFamily.C2:
        return (p.b > 0 and p.d != 1 and is_squarefree(p.d)
                and is_squarefree(math.gcd(p.a, p.b)))
    if T is TorsionFamily.C2xC2:
        return (math.gcd(p.a, p.b) == 1 and p.a % 2 == 0 and p.a != p.b
                and p.d > 0 and is_squarefree(p.d))
    return p.a > 0 and math.gcd(p.a, p.b) == 1


def require_canonical(T: Union[str, TorsionFamily], params) -> CanonicalParams:
    """Validate that params are canonical and attach the a-decomposition."""
    T = as_family(T)
    if isinstance(params, CanonicalParams):
        if params.family is not T:
            raise ValueError(f"parameters belong to {params.family}, not {T}")
        params = params.params
    p = as_params(T, params)
    _nonsingular(T, p)
    if not is_canonical(T, p):
        raise NotCanonicalError(f"{T}{p.as_tuple()} is not canonical; call canonicalize first")
    return CanonicalParams(T, p, _decomposition(T, p.a))
