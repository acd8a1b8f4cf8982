"""A point of order 12, starting from the family parameters.

E_{C12}(6, 11) is not minimal: the even a forces a scaling by 2.
"""

from minmodels import additive_primes, canonicalize, family_invariants, table_minimal
from minmodels.arith import factor

cp = canonicalize("C12", (6, 11))
fi = family_invariants("C12", cp.params)
print("alpha =", factor(fi.alpha))
print("gamma =", factor(fi.gamma))

res = table_minimal("C12", cp)
print("u_T =", res.uT)
print("minimal model:", res.minimal_model)
print("Dmin =", res.min_discriminant_factored)
print("c4 =", factor(res.min_c4))
print("c6 =", factor(res.min_c6))
# Both c4 and c6 of the minimal model are odd, and 2*3*5 divides Dmin.
assert res.min_c4 % 2 and res.min_c6 % 2 and res.min_discriminant % 30 == 0

rep = additive_primes("C12", cp)
print("additive primes:", sorted(rep.primes), "(must lie in", sorted(rep.allowed_set), ")")
