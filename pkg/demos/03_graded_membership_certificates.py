"""Linear-algebra membership with re-verified certificates.

For homogeneous generators, lying in the ideal at a fixed degree is a
span question about coefficient vectors.  Positive answers come with an
explicit combination, which is re-checked by polynomial arithmetic before
being reported.  The route is fully independent of Buchberger reduction.
"""

from symorbits import QQ, PermGroup, graded_member, orbit_ideal, parse_polynomial

# a two-term quadric whose orbit ideal does NOT contain x1^2,
# no matter how many variables there are
for n in (2, 3, 4):
    seed = parse_polynomial("x1^2 + x1*x2", n, QQ)
    ideal = orbit_ideal([seed], PermGroup.symmetric(n))
    report = graded_member(parse_polynomial("x1^2", n, QQ), ideal)
    print(f"n={n}: x1^2 in orbit ideal of {seed}?  {report.verdict}")

print()

# an inhomogeneous orbit that nevertheless generates the whole irrelevant
# ideal: three orbit members combine to 2*x1
seed = parse_polynomial("x1 + x2 + x1^2 - x2^2", 3, QQ)
ideal = orbit_ideal([seed], PermGroup.symmetric(3))
report = graded_member(parse_polynomial("2*x1", 3, QQ), ideal)
print(f"2*x1 in orbit ideal of {seed}?  {report.verdict}")
print("certificate:")
for entry in report.certificate["combination"]:
    print(f"  {entry['coefficient']} * ({entry['generator']})")
print("(the certificate was re-verified exactly before reporting)")
