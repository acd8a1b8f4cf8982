"""Weierstrass models over Q: invariants, admissible changes and the group law."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple, Union

from .arith import is_prime

Rational = Union[int, Fraction]
# A rational point is an (x, y) pair of Fractions; None is the point at infinity.
Point = Optional[Tuple[Fraction, Fraction]]

INFINITY = math.inf


class SingularModelError(ValueError):
    """Raised when a Weierstrass model has zero discriminant."""


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an int, Fraction or rational string, got {x!r}")


@dataclass(frozen=True)
class WeierstrassModel:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __init__(self, a1: Rational = 0, a2: Rational = 0, a3: Rational = 0,
                 a4: Rational = 0, a6: Rational = 0):
        for name, v in zip(("a1", "a2", "a3", "a4", "a6"), (a1, a2, a3, a4, a6)):
            object.__setattr__(self, name, _q(v))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Rational]) -> "WeierstrassModel":
        coeffs = list(coeffs)
        if len(coeffs) != 5:
            raise ValueError("a Weierstrass model needs exactly five coefficients")
        return cls(*coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"model {self} is not integral")
        return tuple(c.numerator for c in self.coeffs)

    def contains(self, P: Point) -> bool:
        if P is None:
            return True
        x, y = P
        return (y * y + self.a1 * x * y + self.a3 * y
                == x**3 + self.a2 * x * x + self.a4 * x + self.a6)

    def __str__(self) -> str:
        lhs = "y^2" + _term(self.a1, "xy") + _term(self.a3, "y")
        rhs = "x^3" + _term(self.a2, "x^2") + _term(self.a4, "x") + _term(self.a6, "")
        return f"{lhs} = {rhs}"


def _term(c: Fraction, mono: str) -> str:
    if c == 0:
        return ""
    sign = " - " if c < 0 else " + "
    mag = abs(c)
    if mono and mag == 1:
        return sign + mono
    return sign + str(mag) + mono


@dataclass(frozen=True)
class CurveInvariants:
    b2: Fraction
    b4: Fraction
    b6: Fraction
    b8: Fraction
    c4: Fraction
    c6: Fraction
    discriminant: Fraction
    j: Optional[Fraction]  # None when the discriminant vanishes


def invariants(m: WeierstrassModel) -> CurveInvariants:
    a1, a2, a3, a4, a6 = m.coeffs
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -b2**3 + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    j = c4**3 / disc if disc != 0 else None
    return CurveInvariants(b2, b4, b6, b8, c4, c6, disc, j)


def require_nonsingular(m: WeierstrassModel) -> CurveInvariants:
    inv = invariants(m)
    if inv.discriminant == 0:
        raise SingularModelError(f"singular model {m}: discriminant is 0")
    return inv


@dataclass(frozen=True)
class AdmissibleChange:
    """x = u^2 x' + r, y = u^3 y' + u^2 s x' + w, with u != 0."""

    u: Fraction
    r: Fraction = Fraction(0)
    s: Fraction = Fraction(0)
    w: Fraction = Fraction(0)

    def __init__(self, u: Rational = 1, r: Rational = 0, s: Rational = 0, w: Rational = 0):
        u = _q(u)
        if u == 0:
            raise ValueError("admissible change needs u != 0")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "r", _q(r))
        object.__setattr__(self, "s", _q(s))
        object.__setattr__(self, "w", _q(w))

    def inverse(self) -> "AdmissibleChange":
        u, r, s, w = self.u, self.r, self.s, self.w
        return AdmissibleChange(1 / u, -r / u**2, -s / u, (r * s - w) / u**3)

    def then(self, other: "AdmissibleChange") -> "AdmissibleChange":
        """Composite change: apply self first, then other."""
        u1, r1, s1, w1 = self.u, self.r, self.s, self.w
        u2, r2, s2, w2 = other.u, other.r, other.s, other.w
        return AdmissibleChange(
            u1 * u2,
            r1 + u1**2 * r2,
            s1 + u1 * s2,
            w1 + u1**2 * s1 * r2 + u1**3 * w2,
        )

    def apply_to_point(self, P: Point) -> Point:
        """Image of a point of the old model on the new model."""
        if P is None:
            return None
        x, y = P
        u, r, s, w = self.u, self.r, self.s, self.w
        xn = (x - r) / u**2
        yn = (y - s * u**2 * xn - w) / u**3
        return (xn, yn)

    def is_identity(self) -> bool:
        return self.u == 1 and self.r == 0 and self.s == 0 and self.w == 0


IDENTITY = AdmissibleChange()


def transform(m: WeierstrassModel, ch: AdmissibleChange) -> WeierstrassModel:
    """Coefficients of the model after the substitution described by ch."""
    a1, a2, a3, a4, a6 = m.coeffs
    u, r, s, w = ch.u, ch.r, ch.s, ch.w
    return WeierstrassModel(
        (a1 + 2 * s) / u,
        (a2 - s * a1 + 3 * r - s * s) / u**2,
        (a3 + r * a1 + 2 * w) / u**3,
        (a4 - s * a3 + 2 * r * a2 - (w + r * s) * a1 + 3 * r * r - 2 * s * w) / u**4,
        (a6 + r * a4 + r * r * a2 + r**3 - w * a3 - w * w - w * r * a1) / u**6,
    )


def valuation(n: Rational, p: int) -> Union[int, float]:
    """p-adic valuation of a rational number; returns math.inf for 0."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = _q(n)
    if n == 0:
        return INFINITY
    v = 0
    num, den = n.numerator, n.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def v2(n: Rational) -> Union[int, float]:
    return valuation(n, 2)


def negate_point(m: WeierstrassModel, P: Point) -> Point:
    if P is None:
        return None
    x, y = P
    return (x, -y - m.a1 * x - m.a3)


def add_points(m: WeierstrassModel, P: Point, Q: Point) -> Point:
    """Chord-and-tangent addition on a general Weierstrass model."""
    if P is None:
        return Q
    if Q is None:
        return P
    a1, a2, a3, a4, a6 = m.coeffs
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2 and y1 + y2 + a1 * x2 + a3 == 0:
        return None
    if x1 == x2:
        den = 2 * y1 + a1 * x1 + a3
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
        nu = (-x1**3 + a4 * x1 + 2 * a6 - a3 * y1) / den
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return (x3, y3)


def multiply_point(m: WeierstrassModel, n: int, P: Point) -> Point:
    if n < 0:
        return multiply_point(m, -n, negate_point(m, P))
    result: Point = None
    addend = P
    while n:
        if n & 1:
            result = add_points(m, result, addend)
        addend = add_points(m, addend, addend)
        n >>= 1
    return result


def make_point(x: Rational, y: Rational) -> Point:
    return (_q(x), _q(y))


def point_order(m: WeierstrassModel, P: Point, bound: int = 12) -> Optional[int]:
    """Order of P if it is at most bound, otherwise None."""
    require_nonsingular(m)
    if P is not None and not m.contains(P):
        raise ValueError(f"point {P} is not on {m}")
    Q = P
    for n in range(1, bound + 1):
        if Q is None:
            return n
        Q = add_points(m, Q, P)
    return None
