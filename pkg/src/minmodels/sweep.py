"""Parameter grids and the per-tuple checks behind `verify` and the sweeps.

Every check compares two independently computed answers: the family tables
against invariants() of the built model, the u_T table against the
Laska-Kraus-Connell oracle, and the additive-prime table against the primes
dividing gcd(c4, Delta) of the oracle's minimal model.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .arith import is_squarefree
from .core import invariants
from .families import (AB_FAMILIES, ALL_FAMILIES, TorsionFamily, as_family, build_ET,
                       family_invariants)
from .minimality import lkc_minimal_model, table_minimal
from .normalization import is_canonical
from .recognition import RecognitionError, identify, recover_t_all
from .reduction import additive_primes, additive_primes_general, minimal_invariants_odd

F = TorsionFamily

# Families whose u_T depends on a high power of 2 dividing a.
TWO_ADIC_FAMILIES = (F.C4, F.C2xC2, F.C2xC4)


def squarefree_range(bound: int, positive: bool = False) -> list[int]:
    vals = [d for d in range(1, bound + 1) if is_squarefree(d)]
    if positive:
        return vals
    return sorted(vals + [-d for d in vals])


def _ab_pairs(bound: int) -> Iterator[tuple[int, int]]:
    for a in range(1, bound + 1):
        for b in range(-bound, bound + 1):
            if math.gcd(a, b) == 1:
                yield a, b


def _two_adic_a_values(max_k: int = 12) -> list[int]:
    return sorted({2**k * m for k in range(max_k + 1) for m in (1, 3, 5, 7, 9, 25)})


def _c3_sample(bound: int, count: int = 150, seed: int = 3) -> list[int]:
    """a-values up to bound**3 covering many cube/square/squarefree shapes."""
    rng = random.Random(seed)
    vals = set(rng.randrange(1, bound**3 + 1) for _ in range(count))
    for c in range(1, 7):
        for d in (1, 2, 3, 5, 6, 7):
            for e in (1, 2, 3, 5, 7, 10):
                if math.gcd(d, e) == 1 and c**3 * d * d * e <= bound**3:
                    vals.add(c**3 * d * d * e)
    return sorted(vals)


def grid(T, bound: int, d_bound: Optional[int] = None, extras: bool = True) -> list[tuple]:
    """Canonical parameter tuples for family T with |a|, |b| <= bound.

    d ranges over squarefree |d| <= d_bound (default: bound).  With extras,
    C3 also gets a-values sampled up to bound**3 and the 2-adic families get
    a = 2^k m for k <= 12.  For C2, b and -b give the identical model, so
    only b > 0 is listed.
    """
    T = as_family(T)
    d_bound = bound if d_bound is None else d_bound
    out: list[tuple] = []
    if T is F.C3_0:
        out = [(a,) for a in range(1, bound + 1)]
        if extras:
            out += [(a,) for a in _c3_sample(bound)]
    elif T is F.C2:
        ds = [d for d in squarefree_range(d_bound) if d != 1]
        for a in range(-bound, bound + 1):
            for b in range(1, bound + 1):
                for d in ds:
                    out.append((a, b, d))
    elif T is F.C2xC2:
        avals = [a for a in range(-bound, bound + 1) if a and a % 2 == 0]
        if extras:
            avals += [a for a in _two_adic_a_values() if a % 2 == 0 and a > bound]
        for a in avals:
            for b in range(-bound, bound + 1):
                if b % 2 and math.gcd(a, b) == 1 and a != b:
                    for d in squarefree_range(d_bound, positive=True):
                        out.append((a, b, d))
    else:
        out = list(_ab_pairs(bound))
        if extras and T is F.C3:
            for a in _c3_sample(bound):
                for b in (-7, -2, -1, 1, 2, 5, 11):
                    if math.gcd(a, b) == 1:
                        out.append((a, b))
        if extras and T in TWO_ADIC_FAMILIES:
            for a in _two_adic_a_values():
                if a > bound:
                    for b in range(-15, 16):
                        if math.gcd(a, b) == 1:
                            out.append((a, b))
    seen = set()
    result = []
    for p in out:
        if p in seen:
            continue
        seen.add(p)
        if is_canonical(T, p):
            result.append(p)
    return result


@dataclass
class CheckResult:
    family: str
    params: tuple
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


PROPERTIES = ("identity", "table", "oracle", "additive", "semistable", "fixed_set",
              "round_trip", "c2xc8_semistable", "few_additive", "parity", "divisibility")

PARITY_FAMILIES = (F.C7, F.C9, F.C10, F.C12, F.C2xC6, F.C2xC8)


def check_identity(T, p) -> bool:
    fi = family_invariants(T, p)
    return fi.alpha**3 - fi.beta**2 == 1728 * fi.gamma


def check_table(T, p) -> bool:
    """Stored tables agree with the invariants of the built model."""
    fi = family_invariants(T, p)
    inv = invariants(build_ET(T, p))
    return (inv.c4, inv.c6, inv.discriminant) == (fi.alpha, fi.beta, fi.gamma)


def check_oracle(T, p) -> Optional[str]:
    tab = table_minimal(T, p)
    orc = lkc_minimal_model(build_ET(T, p))
    got = (tab.uT, tab.min_discriminant, tab.min_c4, tab.min_c6)
    want = (orc.uT, orc.min_discriminant, orc.min_c4, orc.min_c6)
    if got != want:
        return f"table {got} != oracle {want} [{tab.branch}]"
    inv = invariants(tab.minimal_model)
    if (inv.c4, inv.c6) != (tab.min_c4, tab.min_c6) or not tab.minimal_model.is_integral():
        return f"minimal model {tab.minimal_model} does not carry the minimal invariants"
    return None


def check_round_trip(T, p) -> Optional[str]:
    E = build_ET(T, p)
    origin = (Fraction(0), Fraction(0))
    try:
        ident = identify(E, origin, family=T)
    except RecognitionError as exc:
        return f"identify failed: {exc}"
    if ident.params.as_tuple() == tuple(p):
        return None
    # A point of order 2M on a curve with full 2-torsion fixes t only up to
    # the choice of the second 2-torsion generator.
    if ident.tnf is not None and T.value.startswith("C2x"):
        t = Fraction(p[1], p[0])
        if t in recover_t_all(T, ident.tnf):
            return None
    return f"identify returned {ident.family}{ident.params.as_tuple()}"


def check_tuple(T, p, props: Sequence[str] = PROPERTIES) -> CheckResult:
    T = as_family(T)
    res = CheckResult(T.value, tuple(p))
    if "identity" in props and not check_identity(T, p):
        res.failures.append(("identity", "alpha^3 - beta^2 != 1728 gamma"))
    if "table" in props and not check_table(T, p):
        res.failures.append(("table", "stored tables disagree with build_ET"))
    if "oracle" in props:
        msg = check_oracle(T, p)
        if msg:
            res.failures.append(("oracle", msg))
    if {"additive", "semistable", "fixed_set", "c2xc8_semistable", "few_additive"} & set(props):
        rep = additive_primes(T, p)
        if "additive" in props:
            general = additive_primes_general(build_ET(T, p))
            if rep.primes != general:
                res.failures.append(("additive", f"table {sorted(rep.primes)} != "
                                                 f"general {sorted(general)}"))
        if "semistable" in props and rep.semistable != (not rep.primes):
            res.failures.append(("semistable", f"{rep.semistable_row} vs {sorted(rep.primes)}"))
        if "fixed_set" in props and rep.allowed_set and not rep.primes <= rep.allowed_set:
            res.failures.append(("fixed_set", f"{sorted(rep.primes)} not in "
                                              f"{sorted(rep.allowed_set)}"))
        if "c2xc8_semistable" in props and T is F.C2xC8 and rep.primes:
            res.failures.append(("c2xc8_semistable", f"additive at {sorted(rep.primes)}"))
        if "few_additive" in props:
            # two additive primes force |T| | 4 or |T| | 6; three force T in
            # {C2, C3, C4, C2xC2} (C3_0 counts as C3)
            n = len(rep.primes)
            if n >= 2 and 4 % T.group_order and 6 % T.group_order:
                res.failures.append(("few_additive", f"{n} additive primes with |T| = "
                                                     f"{T.group_order}"))
            if n >= 3 and T not in (F.C2, F.C3, F.C3_0, F.C4, F.C2xC2):
                res.failures.append(("few_additive", f"{n} additive primes for {T}"))
    if "parity" in props and T in PARITY_FAMILIES and not minimal_invariants_odd(T, p):
        res.failures.append(("parity", "minimal c4 or c6 is even"))
    if "divisibility" in props and T in (F.C12, F.C2xC6, F.C2xC8):
        dmin = table_minimal(T, p).min_discriminant
        need = 210 if T is F.C2xC8 else 30
        if dmin % need:
            res.failures.append(("divisibility", f"{need} does not divide {dmin}"))
    if "round_trip" in props:
        msg = check_round_trip(T, p)
        if msg:
            res.failures.append(("round_trip", msg))
    return res


def _check_chunk(args) -> list[CheckResult]:
    T, chunk, props = args
    return [check_tuple(T, p, props) for p in chunk]


@dataclass
class VerifySummary:
    counts: dict  # family -> number of tuples checked
    failures: list  # CheckResult with failures, sorted

    @property
    def mismatches(self) -> int:
        return sum(len(r.failures) for r in self.failures)


def run_verify(families: Iterable, bound: int, jobs: int = 1,
               d_bound: Optional[int] = None, props: Sequence[str] = PROPERTIES,
               extras: bool = False) -> VerifySummary:
    families = [as_family(T) for T in families]
    tasks = []
    counts = {}
    for T in families:
        tuples = grid(T, bound, d_bound, extras=extras)
        counts[T.value] = len(tuples)
        step = max(1, len(tuples) // (4 * max(jobs, 1)) or 1)
        for i in range(0, len(tuples), step):
            tasks.append((T, tuples[i:i + step], tuple(props)))
    results: list[CheckResult] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_check_chunk, tasks):
                results.extend(chunk)
    else:
        for task in tasks:
            results.extend(_check_chunk(task))
    order = {T.value: i for i, T in enumerate(ALL_FAMILIES)}
    bad = sorted((r for r in results if not r.ok), key=lambda r: (order[r.family], r.params))
    return VerifySummary(counts, bad)


__all__ = ["grid", "check_tuple", "run_verify", "VerifySummary", "CheckResult",
           "squarefree_range", "PROPERTIES", "AB_FAMILIES"]
