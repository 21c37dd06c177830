"""Groebner bases of orbit ideals, and how membership flips with the field.

The orbit of e_3^2 (the degree-2 elementary symmetric polynomial in three
variables) inside a 5-variable ring generates the same ideal as the orbit
of the monomial x1*x2 over the rationals -- but not over GF(2), where only
the square of the monomial gets in.
"""

from symorbits import (
    GF,
    LEX,
    QQ,
    PermGroup,
    elementary_symmetric,
    orbit_ideal,
    parse_polynomial,
)

print("reduced lex basis of the 4-variable orbit ideal of e_3^2 over QQ:")
ideal4 = orbit_ideal([elementary_symmetric(4, (1, 2, 3), 2, QQ)], PermGroup.symmetric(4))
for g in ideal4.groebner_basis(LEX).basis:
    print(f"  {g}")
print("no degree-2 monomial reduces to zero here: 4 variables are too few.")

for field, name in ((QQ, "QQ"), (GF(2), "GF(2)")):
    ideal = orbit_ideal(
        [elementary_symmetric(5, (1, 2, 3), 2, field)], PermGroup.symmetric(5)
    )
    gb = ideal.groebner_basis()
    x1x2 = parse_polynomial("x1*x2", 5, field)
    print(f"\nover {name} with 5 variables ({len(ideal.expanded)} generators):")
    print(f"  x1*x2 in ideal:     {gb.contains(x1x2)}")
    print(f"  (x1*x2)^2 in ideal: {gb.contains(x1x2 * x1x2)}")
