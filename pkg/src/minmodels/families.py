"""The torsion families E_T, their invariant tables and universal curves.

Each family E_T(a, b) (or E_T(a, b, d) for the two-torsion families, E_T(a)
for C3_0) is a Weierstrass model with a6 = 0 on which (0, 0) is a point of
the advertised order.  The invariants c4 = alpha_T, c6 = beta_T and
Delta = gamma_T are stored as products of binary forms; the test-suite
checks them against invariants(build_ET(...)), they are not derived from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Union

from .arith import FactoredInteger, factor, merge_factorizations
from .core import SingularModelError, WeierstrassModel, invariants


class TorsionFamily(str, Enum):
    C2 = "C2"
    C3_0 = "C3_0"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    C7 = "C7"
    C8 = "C8"
    C9 = "C9"
    C10 = "C10"
    C12 = "C12"
    C2xC2 = "C2xC2"
    C2xC4 = "C2xC4"
    C2xC6 = "C2xC6"
    C2xC8 = "C2xC8"

    def __str__(self) -> str:
        return self.value

    @property
    def arity(self) -> int:
        if self is TorsionFamily.C3_0:
            return 1
        if self in (TorsionFamily.C2, TorsionFamily.C2xC2):
            return 3
        return 2

    @property
    def point_order(self) -> int:
        """Order of the marked point (0, 0) on E_T."""
        return _POINT_ORDER[self]

    @property
    def group_order(self) -> int:
        """Order of the torsion subgroup T itself."""
        n = _POINT_ORDER[self]
        return 2 * n if self.value.startswith("C2x") else n

    @property
    def has_universal_curve(self) -> bool:
        return self not in (TorsionFamily.C2, TorsionFamily.C2xC2, TorsionFamily.C3_0)


_POINT_ORDER = {
    TorsionFamily.C2: 2, TorsionFamily.C3_0: 3, TorsionFamily.C3: 3,
    TorsionFamily.C4: 4, TorsionFamily.C5: 5, TorsionFamily.C6: 6,
    TorsionFamily.C7: 7, TorsionFamily.C8: 8, TorsionFamily.C9: 9,
    TorsionFamily.C10: 10, TorsionFamily.C12: 12, TorsionFamily.C2xC2: 2,
    TorsionFamily.C2xC4: 4, TorsionFamily.C2xC6: 6, TorsionFamily.C2xC8: 8,
}

ALL_FAMILIES = tuple(TorsionFamily)
AB_FAMILIES = tuple(T for T in TorsionFamily if T.arity == 2)


def as_family(T: Union[str, TorsionFamily]) -> TorsionFamily:
    if isinstance(T, TorsionFamily):
        return T
    key = str(T).strip()
    for fam in TorsionFamily:
        if fam.value.lower() == key.lower():
            return fam
    raise ValueError(f"unknown torsion family {T!r}")


@dataclass(frozen=True)
class FamilyParams:
    a: int
    b: Optional[int] = None
    d: Optional[int] = None

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(v for v in (self.a, self.b, self.d) if v is not None)


def as_params(T: TorsionFamily, p) -> FamilyParams:
    """Accept FamilyParams, CanonicalParams or a plain tuple of integers."""
    inner = getattr(p, "params", None)
    if isinstance(inner, FamilyParams):
        p = inner
    if isinstance(p, FamilyParams):
        vals = p.as_tuple()
    elif isinstance(p, int):
        vals = (p,)
    else:
        vals = tuple(p)
    if len(vals) != T.arity:
        raise ValueError(f"{T} takes {T.arity} parameter(s), got {len(vals)}")
    for v in vals:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"family parameters must be integers, got {v!r}")
    return FamilyParams(*vals)


# Weierstrass coefficients (a1, a2, a3, a4); a6 is always 0.

def _coeffs_ab(T: TorsionFamily, a: int, b: int) -> tuple[int, int, int, int]:
    if T is TorsionFamily.C3:
        return a, 0, a * a * b, 0
    if T is TorsionFamily.C4:
        return a, -a * b, -a * a * b, 0
    if T is TorsionFamily.C5:
        return a - b, -a * b, -a * a * b, 0
    if T is TorsionFamily.C6:
        return a - b, -a * b - b * b, -a * a * b - a * b * b, 0
    if T is TorsionFamily.C7:
        return (a * a + a * b - b * b, a * a * b * b - a * b**3,
                a**4 * b * b - a**3 * b**3, 0)
    if T is TorsionFamily.C8:
        return (-a * a + 4 * a * b - 2 * b * b,
                -a * a * b * b + 3 * a * b**3 - 2 * b**4,
                -a**3 * b**3 + 3 * a * a * b**4 - 2 * a * b**5, 0)
    if T is TorsionFamily.C9:
        x = a**4 * b * b - 2 * a**3 * b**3 + 2 * a * a * b**4 - a * b**5
        return a**3 + a * b * b - b**3, x, a**3 * x, 0
    if T is TorsionFamily.C10:
        x = -a**3 * b**3 + 3 * a * a * b**4 - 2 * a * b**5
        return (a**3 - 2 * a * a * b - 2 * a * b * b + 2 * b**3, x,
                (a**3 - 3 * a * a * b + a * b * b) * x, 0)
    if T is TorsionFamily.C12:
        x = (b * (a - 2 * b) * (a - b) ** 2 * (a * a - 3 * a * b + 3 * b * b)
             * (a * a - 2 * a * b + 2 * b * b))
        return (-a**4 + 2 * a**3 * b + 2 * a * a * b * b - 8 * a * b**3 + 6 * b**4,
                x, a * (b - a) ** 3 * x, 0)
    if T is TorsionFamily.C2xC4:
        return a, -a * b - 4 * b * b, -a * a * b - 4 * a * b * b, 0
    if T is TorsionFamily.C2xC6:
        return (-19 * a * a + 2 * a * b + b * b,
                -10 * a**4 + 22 * a**3 * b - 14 * a * a * b * b + 2 * a * b**3,
                90 * a**6 - 198 * a**5 * b + 116 * a**4 * b * b + 4 * a**3 * b**3
                - 14 * a * a * b**4 + 2 * a * b**5, 0)
    if T is TorsionFamily.C2xC8:
        x = (-4 * a * b * b * (a + 2 * b) * (a + 4 * b) ** 2
             * (a * a + 4 * a * b + 8 * b * b))
        return (-a**4 - 8 * a**3 * b - 24 * a * a * b * b + 64 * b**4, x,
                -2 * b * (a + 4 * b) * (a * a - 8 * b * b) * x, 0)
    raise ValueError(f"{T} is not a two-parameter family")


def build_ET(T: Union[str, TorsionFamily], params) -> WeierstrassModel:
    """The Weierstrass model E_T at the given integer parameters."""
    T = as_family(T)
    p = as_params(T, params)
    if T is TorsionFamily.C2:
        a, b, d = p.a, p.b, p.d
        return WeierstrassModel(0, 2 * a, 0, a * a - b * b * d, 0)
    if T is TorsionFamily.C2xC2:
        a, b, d = p.a, p.b, p.d
        return WeierstrassModel(0, a * d + b * d, 0, a * b * d * d, 0)
    if T is TorsionFamily.C3_0:
        return WeierstrassModel(0, 0, p.a, 0, 0)
    a1, a2, a3, a4 = _coeffs_ab(T, p.a, p.b)
    return WeierstrassModel(a1, a2, a3, a4, 0)


# Invariant tables.  A binary form of degree n is the coefficient tuple of
# a^n, a^(n-1) b, ..., b^n.  Each entry is (constant, [(form, exponent), ...]).
Form = tuple[int, ...]
Product = tuple[int, list[tuple[Form, int]]]

_AB_TABLES: dict[str, tuple[Product, Product, Product]] = {
    'C3': (
        (1, [((1, 0), 3), ((1, -24), 1)]),
        (-1, [((1, 0), 4), ((1, -36, 216), 1)]),
        (1, [((0, 1), 3), ((1, 0), 8), ((1, -27), 1)]),
    ),
    'C4': (
        (1, [((1, 0), 2), ((1, 16, 16), 1)]),
        (-1, [((1, 0), 3), ((1, 8), 1), ((1, 16, -8), 1)]),
        (1, [((0, 1), 4), ((1, 0), 7), ((1, 16), 1)]),
    ),
    'C5': (
        (1, [((1, 12, 14, -12, 1), 1)]),
        (-1, [((1, 0, 1), 1), ((1, 18, 74, -18, 1), 1)]),
        (-1, [((1, 0), 5), ((0, 1), 5), ((1, 11, -1), 1)]),
    ),
    'C6': (
        (1, [((1, 3), 1), ((1, 9, 3, 3), 1)]),
        (-1, [((1, 6, -3), 1), ((1, 12, 30, 36, 9), 1)]),
        (1, [((1, 0), 2), ((0, 1), 6), ((1, 9), 1), ((1, 1), 3)]),
    ),
    'C7': (
        (1, [((1, -1, 1), 1), ((1, 5, -10, -15, 30, -11, 1), 1)]),
        (-1, [((1, 6, -15, -46, 174, -222, 273, -486, 570, -354, 117, -18, 1), 1)]),
        (-1, [((1, 0), 7), ((0, 1), 7), ((1, -1), 7), ((1, 5, -8, 1), 1)]),
    ),
    'C8': (
        (1, [((1, -16, 96, -288, 480, -448, 224, -64, 16), 1)]),
        (-1, [((1, -8, 16, -16, 8), 1), ((1, -16, 96, -288, 456, -352, 80, 32, -8), 1)]),
        (1, [((1, 0), 2), ((0, 1), 8), ((1, -2), 4), ((1, -1), 8), ((1, -8, 8), 1)]),
    ),
    'C9': (
        (1, [((1, 0, -3, 1), 1), ((1, 0, -9, 27, -45, 54, -48, 27, -9, 1), 1)]),
        (-1, [((1, 0, -18, 42, 27, -306, 735, -1080, 1359, -2032, 3240, -4230, 4128, -2970, 1557, -570, 135, -18, 1), 1)]),
        (-1, [((1, 0), 9), ((0, 1), 9), ((1, -1), 9), ((1, -1, 1), 3), ((1, 3, -6, 1), 1)]),
    ),
    'C10': (
        (1, [((1, -8, 16, 40, -240, 432, -256, -288, 720, -720, 416, -128, 16), 1)]),
        (-1, [((1, -2, 2), 1), ((1, -2, 0, 0, 2), 1), ((1, -2, -6, 12, -4), 1), ((1, -6, 4, 48, -146, 176, -104, 32, -4), 1)]),
        (1, [((1, 0), 5), ((0, 1), 10), ((1, -2), 5), ((1, -1), 10), ((1, 2, -4), 1), ((1, -3, 1), 2)]),
    ),
    'C12': (
        (1, [((1, -6, 12, -12, 6), 1), ((1, -18, 144, -684, 2154, -4728, 7368, -8112, 6132, -3000, 864, -144, 24), 1)]),
        (-1, [((1, -12, 60, -168, 288, -312, 216, -96, 24), 1), ((1, -24, 264, -1776, 8208, -27696, 70632, -138720, 211296, -248688, 222552, -146304, 65880, -17136, 1008, 576, -72), 1)]),
        (1, [((1, 0), 2), ((0, 1), 12), ((1, -2), 6), ((1, -1), 12), ((1, -6, 6), 1), ((1, -2, 2), 3), ((1, -3, 3), 4)]),
    ),
    'C2xC4': (
        (1, [((1, 16, 80, 128, 256), 1)]),
        (-1, [((1, 8, -16), 1), ((1, 8, 8), 1), ((1, 8, 32), 1)]),
        (1, [((1, 0), 2), ((0, 1), 4), ((1, 8), 2), ((1, 4), 4)]),
    ),
    'C2xC6': (
        (1, [((21, -6, 1), 1), ((6861, -2178, -825, 180, 75, -18, 1), 1)]),
        (-1, [((183, -36, -30, 12, -1), 1), ((393, -156, 30, -12, 1), 1), ((759, -228, -30, 12, -1), 1)]),
        (64, [((1, 0), 6), ((3, -1), 2), ((3, 1), 2), ((9, -1), 2), ((1, -1), 6), ((5, -1), 6)]),
    ),
    'C2xC8': (
        (1, [((1, 32, 448, 3584, 17664, 51200, 51200, -237568, -1183744, -1900544, 3276800, 26214400, 72351744, 117440512, 117440512, 67108864, 16777216), 1)]),
        (-1, [((1, 16, 96, 256, -256, -4096, -12288, -16384, -8192), 1), ((1, 16, 96, 256, 128, -1024, -3072, -4096, -2048), 1), ((1, 16, 96, 256, 512, 2048, 6144, 8192, 4096), 1)]),
        (256, [((1, 0), 8), ((0, 1), 8), ((1, 2), 8), ((1, 4), 8), ((1, 0, -8), 2), ((1, 8, 8), 2), ((1, 4, 8), 4)]),
    ),
}


def eval_form(form: Sequence[int], a: int, b: int) -> int:
    n = len(form) - 1
    total = 0
    for i, c in enumerate(form):
        if c:
            total += c * a ** (n - i) * b**i
    return total


def _eval_product(prod: Product, a: int, b: int) -> int:
    const, parts = prod
    v = const
    for form, e in parts:
        v *= eval_form(form, a, b) ** e
    return v


def _factor_product(prod: Product, a: int, b: int) -> FactoredInteger:
    const, parts = prod
    pieces = [(factor(const), 1)]
    for form, e in parts:
        val = eval_form(form, a, b)
        if val == 0:
            raise SingularModelError("discriminant vanishes")
        pieces.append((factor(val), e))
    return merge_factorizations(*pieces)


@dataclass(frozen=True)
class FamilyInvariants:
    alpha: int
    beta: int
    gamma: int


def family_invariants(T: Union[str, TorsionFamily], params) -> FamilyInvariants:
    """(alpha_T, beta_T, gamma_T) evaluated from the stored tables."""
    T = as_family(T)
    p = as_params(T, params)
    if T is TorsionFamily.C2:
        a, b, d = p.a, p.b, p.d
        return FamilyInvariants(
            16 * (3 * b * b * d + a * a),
            -64 * a * (9 * b * b * d - a * a),
            64 * b * b * d * (b * b * d - a * a) ** 2,
        )
    if T is TorsionFamily.C2xC2:
        a, b, d = p.a, p.b, p.d
        return FamilyInvariants(
            16 * d * d * (a * a - a * b + b * b),
            -32 * d**3 * (a + b) * (a - 2 * b) * (2 * a - b),
            16 * a * a * b * b * d**6 * (a - b) ** 2,
        )
    if T is TorsionFamily.C3_0:
        a = p.a
        return FamilyInvariants(0, -216 * a * a, -27 * a**4)
    al, be, ga = _AB_TABLES[T.value]
    return FamilyInvariants(
        _eval_product(al, p.a, p.b),
        _eval_product(be, p.a, p.b),
        _eval_product(ga, p.a, p.b),
    )


def gamma_factored(T: Union[str, TorsionFamily], params) -> FactoredInteger:
    """Factorization of gamma_T, assembled factor by factor from the table."""
    T = as_family(T)
    p = as_params(T, params)
    if T is TorsionFamily.C2:
        a, b, d = p.a, p.b, p.d
        parts = [(factor(64), 1), (factor(b), 2), (factor(d), 1),
                 (factor(b * b * d - a * a), 2)]
    elif T is TorsionFamily.C2xC2:
        a, b, d = p.a, p.b, p.d
        parts = [(factor(16), 1), (factor(a), 2), (factor(b), 2), (factor(d), 6),
                 (factor(a - b), 2)]
    elif T is TorsionFamily.C3_0:
        parts = [(factor(-27), 1), (factor(p.a), 4)]
    else:
        return _factor_product(_AB_TABLES[T.value][2], p.a, p.b)
    for f, _ in parts:
        if f.value == 0:
            raise SingularModelError("discriminant vanishes")
    return merge_factorizations(*parts)


def check_family_invariants(T: Union[str, TorsionFamily], params) -> bool:
    """True when the stored tables agree with the invariants of build_ET."""
    T = as_family(T)
    fi = family_invariants(T, params)
    inv = invariants(build_ET(T, params))
    return (inv.c4, inv.c6, inv.discriminant) == (fi.alpha, fi.beta, fi.gamma)


# Universal curves: the Tate normal form y^2 + (1-g)xy - fy = x^3 - fx^2.

def _fg(T: TorsionFamily, t: Fraction) -> tuple[Fraction, Fraction]:
    if T is TorsionFamily.C4:
        return t, Fraction(0)
    if T is TorsionFamily.C5:
        return t, t
    if T is TorsionFamily.C6:
        return t * t + t, t
    if T is TorsionFamily.C7:
        return t**3 - t * t, t * t - t
    if T is TorsionFamily.C8:
        f = 2 * t * t - 3 * t + 1
        return f, f / t
    if T is TorsionFamily.C9:
        return t**5 - 2 * t**4 + 2 * t**3 - t * t, t**3 - t * t
    if T is TorsionFamily.C10:
        q = t * t - 3 * t + 1
        return (2 * t**5 - 3 * t**4 + t**3) / q**2, (-2 * t**3 + 3 * t * t - t) / q
    if T is TorsionFamily.C12:
        return ((12 * t**6 - 30 * t**5 + 34 * t**4 - 21 * t**3 + 7 * t * t - t) / (t - 1) ** 4,
                (-6 * t**4 + 9 * t**3 - 5 * t * t + t) / (t - 1) ** 3)
    if T is TorsionFamily.C2xC4:
        return 4 * t * t + t, Fraction(0)
    if T is TorsionFamily.C2xC6:
        return ((-2 * t**3 + 14 * t * t - 22 * t + 10) / ((t + 3) ** 2 * (t - 3) ** 2),
                (-2 * t + 10) / ((t + 3) * (t - 3)))
    if T is TorsionFamily.C2xC8:
        num = 16 * t**3 + 16 * t * t + 6 * t + 1
        return num / (8 * t * t - 1) ** 2, num / (2 * t * (4 * t + 1) * (8 * t * t - 1))
    raise ValueError(f"{T} has no Tate-normal-form universal curve")


def tate_fg(T: Union[str, TorsionFamily], t) -> tuple[Fraction, Fraction]:
    """The pair (f(t), g(t)) for a family with N >= 4."""
    T = as_family(T)
    try:
        return _fg(T, Fraction(t))
    except ZeroDivisionError:
        raise ValueError(f"t = {t} is a pole of the {T} parametrization") from None


def tate_model(f, g) -> WeierstrassModel:
    f, g = Fraction(f), Fraction(g)
    return WeierstrassModel(1 - g, -f, -f, 0, 0)


def universal_curve(T: Union[str, TorsionFamily], t) -> WeierstrassModel:
    """X_t(T); for C3 this is y^2 + xy + ty = x^3."""
    T = as_family(T)
    if not T.has_universal_curve:
        raise ValueError(f"{T} has no one-parameter universal curve")
    t = Fraction(t)
    if T is TorsionFamily.C3:
        m = WeierstrassModel(1, 0, t, 0, 0)
    else:
        m = tate_model(*tate_fg(T, t))
    if invariants(m).discriminant == 0:
        raise SingularModelError(f"X_t({T}) is singular at t = {t}")
    return m


def rescale_factor_wT(T: Union[str, TorsionFamily], a: int, b: int) -> int:
    """w_T(a, b): x -> x / w^2, y -> y / w^3 takes X_{b/a}(T) to E_T(a, b)."""
    T = as_family(T)
    if T in (TorsionFamily.C3, TorsionFamily.C4, TorsionFamily.C5,
             TorsionFamily.C6, TorsionFamily.C2xC4):
        w = a
    elif T is TorsionFamily.C7:
        w = a * a
    elif T is TorsionFamily.C8:
        w = a * b
    elif T is TorsionFamily.C9:
        w = a**3
    elif T is TorsionFamily.C10:
        w = a * (a * a - 3 * a * b + b * b)
    elif T is TorsionFamily.C12:
        w = a * (b - a) ** 3
    elif T is TorsionFamily.C2xC6:
        w = b * b - 9 * a * a
    elif T is TorsionFamily.C2xC8:
        w = 2 * b * (a + 4 * b) * (8 * b * b - a * a)
    else:
        raise ValueError(f"{T} has no one-parameter universal curve")
    if w == 0:
        raise ValueError(f"w_{T}({a}, {b}) = 0")
    return w


# Every prime dividing gcd(alpha_T, gamma_T) divides delta_T; the multiplier
# (None, "a" or "d") says which parameter, if any, scales the constant.
_DELTA = {
    TorsionFamily.C3: (6, "a"), TorsionFamily.C4: (2, "a"),
    TorsionFamily.C5: (5, None), TorsionFamily.C6: (6, None),
    TorsionFamily.C7: (7, None), TorsionFamily.C8: (2, None),
    TorsionFamily.C9: (3, None), TorsionFamily.C10: (10, None),
    TorsionFamily.C12: (6, None), TorsionFamily.C2xC2: (2, "d"),
    TorsionFamily.C2xC4: (2, None), TorsionFamily.C2xC6: (6, None),
    TorsionFamily.C2xC8: (2, None),
}


def delta_constant(T: Union[str, TorsionFamily]) -> tuple[int, Optional[str]]:
    T = as_family(T)
    if T not in _DELTA:
        raise ValueError(f"no delta constant is tabulated for {T}")
    return _DELTA[T]


def delta_value(T: Union[str, TorsionFamily], params) -> int:
    T = as_family(T)
    const, mult = delta_constant(T)
    p = as_params(T, params)
    if mult == "a":
        return const * p.a
    if mult == "d":
        return const * p.d
    return const
