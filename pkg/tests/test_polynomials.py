import random
from fractions import Fraction

import pytest

from symorbits import (
    GF,
    GREVLEX,
    LEX,
    QQ,
    Polynomial,
    PolynomialSyntaxError,
    SupportSet,
    analyze_support,
    elementary_symmetric,
    format_polynomial,
    monomial_type,
    monomials_of_degree,
    monomials_of_type,
    parse_polynomial,
)
from symorbits.fields import binomial


def random_polynomial(rng, nvars, field=QQ, max_degree=3, max_terms=5):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = tuple(rng.randint(0, max_degree) for _ in range(nvars))
        terms[mono] = rng.randint(-9, 9)
    return Polynomial(field, nvars, terms)


class TestArithmetic:
    def test_distributivity_example(self, P):
        left = (P("x1 - x4", 5)) * (P("x2 - x5", 5))
        assert left == P("x1*x2 - x1*x5 - x2*x4 + x4*x5", 5)

    def test_cancellation(self, P):
        f = P("x1^2*x2 + 3*x1", 3)
        assert (f + f.scale(-1)).is_zero

    def test_frobenius_over_f2(self):
        f = parse_polynomial("x1 + x2", 2, GF(2))
        assert f * f == parse_polynomial("x1^2 + x2^2", 2, GF(2))

    def test_mismatch_raises(self, P):
        with pytest.raises(ValueError):
            P("x1", 2) + P("x1", 3)
        with pytest.raises(ValueError):
            P("x1", 2) + parse_polynomial("x1", 2, GF(5))

    def test_power(self, P):
        assert P("x1 + 1", 1) ** 2 == P("x1^2 + 2*x1 + 1", 1)
        assert P("x1", 1) ** 0 == P("1", 1)

    def test_evaluate_is_ring_homomorphism(self):
        rng = random.Random(3)
        for _ in range(40):
            nvars = rng.randint(1, 4)
            f = random_polynomial(rng, nvars)
            g = random_polynomial(rng, nvars)
            point = [rng.randint(-4, 4) for _ in range(nvars)]
            assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)
            assert (f + g).evaluate(point) == f.evaluate(point) + g.evaluate(point)


class TestEvaluation:
    def test_elementary_symmetric_at_ones(self):
        e = elementary_symmetric(3, (1, 2, 3), 2, QQ)
        assert e.evaluate([1, 1, 1]) == QQ.scalar(3)

    def test_vanishing_point(self, P):
        f = P("x1^2*x2 + x1*x2^2", 3)
        assert f.evaluate([1, -1, 0]).is_zero

    def test_constant_term_at_origin(self):
        rng = random.Random(5)
        for _ in range(20):
            f = random_polynomial(rng, 3)
            origin = [0, 0, 0]
            assert f.evaluate(origin) == f.coefficient((0, 0, 0))

    def test_evaluate_rejects_bad_points(self, P):
        f = P("x1 + x2", 2)
        with pytest.raises(ValueError):
            f.evaluate([1])
        with pytest.raises(ValueError):
            f.evaluate([GF(5).scalar(1), GF(5).scalar(2)])


class TestParseFormat:
    def test_paper_polynomials(self, P):
        f = P("x1^2*x2 + x1*x2^2", 2)
        assert f.terms == {(2, 1): Fraction(1), (1, 2): Fraction(1)}

    def test_zero(self):
        assert parse_polynomial("0", 3, QQ).is_zero
        assert format_polynomial(Polynomial.zero(QQ, 3)) == "0"

    def test_counterexample_family_member(self, P):
        f = P("x1^2 + 3*x1*x2", 2)
        assert f.coefficient((1, 1)) == QQ.scalar(3)

    def test_rational_coefficients(self, P):
        f = P("1/2*x1 - 2/3", 1)
        assert f.coefficient((1,)) == QQ.scalar(Fraction(1, 2))
        assert f.coefficient((0,)) == QQ.scalar(Fraction(-2, 3))

    def test_syntax_error_positions(self):
        with pytest.raises(PolynomialSyntaxError) as err:
            parse_polynomial("x1 + @", 2, QQ)
        assert err.value.position == 5
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("", 2, QQ)
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("x1 + ", 2, QQ)

    def test_variable_out_of_range(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("x3", 2, QQ)

    def test_prime_field_literals_reduced(self):
        f = parse_polynomial("5*x1", 2, GF(3))
        assert f.coefficient((1, 0)) == GF(3).scalar(2)

    def test_prime_field_bad_denominator(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("1/2*x1", 2, GF(2))

    def test_roundtrip_randomized(self):
        rng = random.Random(17)
        for _ in range(60):
            nvars = rng.randint(1, 5)
            f = random_polynomial(rng, nvars)
            for order in (LEX, GREVLEX):
                assert parse_polynomial(format_polynomial(f, order), nvars, QQ) == f

    def test_roundtrip_prime_field(self):
        rng = random.Random(19)
        field = GF(7)
        for _ in range(40):
            f = random_polynomial(rng, 3, field=field)
            assert parse_polynomial(format_polynomial(f), 3, field) == f

    def test_formatting_descending_with_absorbed_signs(self, P):
        f = P("x2 - x1^2 + 1/2", 2)
        assert format_polynomial(f, LEX) == "-x1^2 + x2 + 1/2"


class TestOrders:
    def test_lex_vs_grevlex_disagree(self):
        a, b = (3, 0, 1), (2, 2, 0)  # x1^3*x3 vs x1^2*x2^2
        assert LEX.key(a) > LEX.key(b)
        assert GREVLEX.key(a) < GREVLEX.key(b)

    def test_total_multiplicative_with_one_minimal(self):
        rng = random.Random(23)
        one = (0, 0, 0)
        monos = monomials_of_degree(3, 2) + monomials_of_degree(3, 3) + [one]
        for order in (LEX, GREVLEX):
            for _ in range(300):
                a, b, c = (rng.choice(monos) for _ in range(3))
                ka, kb = order.key(a), order.key(b)
                # totality and antisymmetry
                assert (ka > kb) or (kb > ka) or a == b
                # multiplicative
                shifted = tuple(x + y for x, y in zip(a, c)), tuple(x + y for x, y in zip(b, c))
                assert (ka > kb) == (order.key(shifted[0]) > order.key(shifted[1]))
                # 1 is minimal
                if a != one:
                    assert order.key(a) > order.key(one)


class TestElementarySymmetric:
    def test_paper_example(self, P):
        assert elementary_symmetric(3, (1, 2, 3), 2, QQ) == P("x1*x2 + x1*x3 + x2*x3", 3)

    def test_full_product(self):
        for n in (1, 2, 4):
            e = elementary_symmetric(n, range(1, n + 1), n, QQ)
            assert e == Polynomial(QQ, n, {(1,) * n: 1})

    def test_two_variables(self, P):
        assert elementary_symmetric(2, (1, 2), 1, QQ) == P("x1 + x2", 2)

    def test_term_count_and_shape(self):
        for n in range(1, 7):
            for d in range(1, n + 1):
                e = elementary_symmetric(n, range(1, n + 1), d, QQ)
                assert len(e.terms) == binomial(n, d)
                assert all(c == 1 for c in e.terms.values())
                assert all(sum(m) == d and max(m) <= 1 for m in e.terms)

    def test_subset_of_variables(self, P):
        assert elementary_symmetric(4, (2, 3, 4), 2, QQ) == P("x2*x3 + x2*x4 + x3*x4", 4)

    def test_validation(self):
        with pytest.raises(ValueError):
            elementary_symmetric(3, (1, 2, 3), 4, QQ)
        with pytest.raises(ValueError):
            elementary_symmetric(3, (1, 5), 1, QQ)


class TestSupportAnalysis:
    def test_mixed_degree_example(self, P):
        prof = analyze_support(P("x1^2*x2 + x1*x2^2", 3).support())
        assert prof.homogeneous and prof.degree == 3
        assert prof.k_min_positive == 2
        assert prof.types == frozenset({(2, 1)})
        assert not prof.squarefree

    def test_symmetric_squarefree(self):
        prof = analyze_support(elementary_symmetric(3, (1, 2, 3), 2, QQ).support())
        assert prof.homogeneous and prof.degree == 2
        assert prof.k_min_positive == 2
        assert prof.squarefree and prof.symmetric

    def test_asymmetric_example(self, P):
        prof = analyze_support(P("x1^3 + x1*x2*x3", 3).support())
        assert prof.k_min_positive == 1
        assert prof.types == frozenset({(3,), (1, 1, 1)})
        assert not prof.symmetric  # x2^3 is absent

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            Polynomial.zero(QQ, 3).support()
        with pytest.raises(ValueError):
            SupportSet.of(3, [])

    def test_monomial_type(self):
        assert monomial_type((2, 1, 0)) == (2, 1)
        assert monomial_type((1, 1, 1)) == (1, 1, 1)
        assert monomial_type((0, 0, 0)) == ()

    def test_same_type_iff_permutations(self):
        rng = random.Random(29)
        for _ in range(100):
            a = tuple(rng.randint(0, 3) for _ in range(4))
            b = tuple(rng.randint(0, 3) for _ in range(4))
            same_type = monomial_type(a) == monomial_type(b)
            permutation_related = sorted(a) == sorted(b)
            assert same_type == permutation_related

    def test_monomials_of_type_enumeration(self):
        monos = monomials_of_type((2, 1), 3)
        assert len(monos) == 6
        assert all(monomial_type(m) == (2, 1) for m in monos)
