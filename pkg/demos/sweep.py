"""Check the closed-form tables against the generic algorithm on a small grid."""

from minmodels.sweep import run_verify
from minmodels.families import ALL_FAMILIES

summary = run_verify(ALL_FAMILIES, bound=10, d_bound=5, jobs=4)
for fam, n in summary.counts.items():
    print(f"{fam:6} {n:5d} tuples")
print("mismatches:", summary.mismatches)
for r in summary.failures[:5]:
    print(r)
