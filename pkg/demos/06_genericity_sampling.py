"""Sampling genericity statements.

"General coefficients" means a dense open set in coefficient space; no
finite computation certifies it, but random integer draws land inside it
with high probability.  The sampler runs an exact verifier per draw and
reports a frequency -- and occasionally exhibits an honest failure, such
as a coefficient vector summing to zero.
"""

from symorbits import (
    QQ,
    PermGroup,
    Polynomial,
    SupportSet,
    monomials_of_type,
    rank_condition,
    sample_genericity,
)

support = SupportSet.of(3, [(3, 0, 0), (1, 1, 1)])
report = sample_genericity(
    support, PermGroup.symmetric(3), "irrelevant_radical", trials=20, seed=2026
)
print("orbit ideals from the support {x1^3, x1*x2*x3} under S3:")
print(f"  radical equal to (x1, x2, x3) in {report.success_rate} trials")
for vec in report.failures:
    print(f"  failing coefficients {vec}: the coefficient sum vanishes, so the")
    print("  all-ones point is a common zero and the radical misses the origin ideal")

print()
type_support = SupportSet.of(3, monomials_of_type((2, 1), 3))
report2 = sample_genericity(
    type_support, PermGroup.symmetric(3), "monomial_ideal", trials=20, seed=2026
)
print("single-type support (all six monomials of type (2,1)) under S3:")
print(f"  orbit ideal is monomial in {report2.success_rate} trials")

all_ones = Polynomial(QQ, 3, {m: 1 for m in monomials_of_type((2, 1), 3)})
failure = rank_condition(all_ones, PermGroup.symmetric(3))
print(f"  the all-ones coefficient vector fails deterministically "
      f"(rank {failure.parameters['rank']} of {failure.parameters['monomials_of_type']})")
