"""Minimal models of Frey curves y^2 = x(x + a)(x + b).

For even a the curve is minimal unless 16 | a and b = 1 mod 4, in which
case x -> 4x + ..., y -> 8y + ... gives y^2 + xy = x^3 + (a+b-1)/4 x^2 + ab/16 x.
For odd a that rule does not apply directly: F(1, 16) is not minimal.
"""

import math
from collections import Counter

from minmodels.minimality import frey_closed_form_u, frey_minimal, frey_model, lkc_minimal_model

for a, b in [(16, 1), (16, 3), (6, 1), (1, 16), (-99, -80)]:
    res = frey_minimal(a, b)
    print(f"F({a}, {b}): u = {res.uT}, Dmin = {res.min_discriminant_factored}, "
          f"model {res.minimal_model}")

tally = Counter()
for a in range(-40, 41):
    for b in range(-40, 41):
        if math.gcd(a, b) != 1 or a * b * (a - b) == 0:
            continue
        u = lkc_minimal_model(frey_model(a, b)).uT
        rule = frey_closed_form_u(a, b)
        tally["even a" if a % 2 == 0 else "odd a", u == rule] += 1
for (kind, agree), n in sorted(tally.items()):
    print(f"{kind}: rule {'agrees' if agree else 'disagrees'} on {n} pairs")
