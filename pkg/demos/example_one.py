"""Walk through a curve with a point of order 4.

We start from a short Weierstrass model and a rational point, recognise the
family member it belongs to, and then read off the global minimal model and
the primes of additive reduction.
"""

from fractions import Fraction

from minmodels import (WeierstrassModel, additive_primes, identify, invariants,
                       lkc_minimal_model, point_order, table_minimal)

E = WeierstrassModel(0, 0, 0, -1900650154752, 990015042347311104)
P = (Fraction(222288), Fraction(760596480))

print("curve:", E)
print("P has order", point_order(E, P))

ident = identify(E, P)
print("family", ident.family.value, "with (a, b) =", ident.params.as_tuple(), "t =", ident.t)

res = table_minimal(ident.family, ident.params)
print("u_T =", res.uT, "via branch", res.branch)
print("minimal model:", res.minimal_model)
print("minimal discriminant:", res.min_discriminant_factored)

# The generic algorithm gets there independently.
check = lkc_minimal_model(E)
assert check.min_discriminant == res.min_discriminant
print("generic algorithm agrees; it scaled the input by u =", check.uT)

rep = additive_primes(ident.family, ident.params)
print("additive reduction at", sorted(rep.primes), rep.additive)
print("j-invariant:", invariants(res.minimal_model).j)

# The same curve also has full 2-torsion, so P can be read in C2 x C4 too.
print("as C2 x C4:", identify(E, P, prefer_full_torsion=True).params.as_tuple())
