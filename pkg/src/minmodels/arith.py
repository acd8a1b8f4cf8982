"""Integer arithmetic: primality, factorization and power-free decompositions.

Factoring strategy: trial division by the primes below 10**6, then
Pollard's rho (Brent's variant) on whatever cofactor remains, with a
deterministic Miller-Rabin test to decide when to stop.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

TRIAL_BOUND = 10**6

# Bases that make Miller-Rabin deterministic below 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_BOUND + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(TRIAL_BOUND) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, TRIAL_BOUND + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic below 3.3e24; above that the fixed bases make a false
    positive astronomically unlikely but not impossible.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite n."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict[int, int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split_large(r, out, rng)
        _split_large(r, out, rng)
        return
    f = _brent(n, rng)
    _split_large(f, out, rng)
    _split_large(n // f, out, rng)


@dataclass(frozen=True)
class FactoredInteger:
    """sign * prod(p**e for p, e in factors), primes in increasing order."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p**e
        return v

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __str__(self) -> str:
        if not self.factors:
            return str(self.sign)
        body = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        return f"-{body}" if self.sign < 0 else body

    @classmethod
    def from_dict(cls, sign: int, exps: dict[int, int]) -> "FactoredInteger":
        return cls(sign, tuple(sorted((p, e) for p, e in exps.items() if e)))


def factor(n: int) -> FactoredInteger:
    """Factor a nonzero integer."""
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    exps: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            exps[p] = e
    if n > 1:
        if n <= TRIAL_BOUND**2:
            exps[n] = exps.get(n, 0) + 1
        else:
            _split_large(n, exps, random.Random(n))
    return FactoredInteger.from_dict(sign, exps)


def prime_divisors(n: int) -> list[int]:
    return list(factor(n).primes)


def merge_factorizations(*parts: tuple[FactoredInteger, int]) -> FactoredInteger:
    """Combine (factorization, power) pairs into the factorization of the product."""
    sign = 1
    exps: dict[int, int] = {}
    for f, k in parts:
        if k < 0:
            raise ValueError("negative powers are not supported")
        sign *= f.sign**k
        for p, e in f.factors:
            exps[p] = exps.get(p, 0) + e * k
    return FactoredInteger.from_dict(sign, exps)


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n = g**2 * h with g > 0 and h squarefree (h keeps the sign of n)."""
    f = factor(n)
    g, h = 1, f.sign
    for p, e in f.factors:
        g *= p ** (e // 2)
        if e % 2:
            h *= p
    return g, h


def is_squarefree(n: int) -> bool:
    return n != 0 and squarefree_decompose(n)[0] == 1


def cube_square_decompose(a: int) -> tuple[int, int, int]:
    """Write a positive integer as c**3 * d**2 * e with d, e squarefree and coprime."""
    if a <= 0:
        raise ValueError("cube_square_decompose needs a positive integer")
    c = d = e = 1
    for p, k in factor(a).factors:
        q, r = divmod(k, 3)
        c *= p**q
        if r == 1:
            e *= p
        elif r == 2:
            d *= p
    return c, d, e


def square_decompose(a: int) -> tuple[int, int]:
    """Write a positive integer as c**2 * d with d squarefree."""
    if a <= 0:
        raise ValueError("square_decompose needs a positive integer")
    return squarefree_decompose(a)


def cube_decompose(n: int) -> tuple[int, int]:
    """Write n = k**3 * m with m cubefree; k carries the sign of n so that m > 0."""
    f = factor(n)
    k, m = f.sign, 1
    for p, e in f.factors:
        k *= p ** (e // 3)
        m *= p ** (e % 3)
    return k, m


def divisors(n: int) -> list[int]:
    """Positive divisors of a nonzero integer."""
    divs = [1]
    for p, e in factor(n).factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def integer_sqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None
