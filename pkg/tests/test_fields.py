import random
from fractions import Fraction

import pytest

from symorbits import (
    GF,
    QQ,
    Field,
    binomial,
    binomial_alternating_sum,
    char_divides_binomial,
    falling_factorial,
)


class TestScalarArithmetic:
    def test_rational_addition(self):
        assert QQ.scalar(Fraction(1, 2)) + QQ.scalar(Fraction(1, 3)) == QQ.scalar(Fraction(5, 6))

    def test_prime_inverse(self):
        assert GF(7).scalar(3).inverse() == GF(7).scalar(5)

    def test_characteristic_two(self):
        one = GF(2).scalar(1)
        assert (one + one).is_zero

    def test_field_mismatch_raises(self):
        with pytest.raises(ValueError):
            QQ.scalar(1) + GF(5).scalar(1)

    def test_inverse_of_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            QQ.scalar(0).inverse()
        with pytest.raises(ZeroDivisionError):
            GF(5).scalar(0).inverse()

    def test_rational_values_reduced(self):
        s = QQ.scalar(Fraction(4, 8))
        assert s.value == Fraction(1, 2)
        assert s.value.denominator == 2

    def test_prime_values_normalized(self):
        assert GF(7).scalar(-1).value == 6
        assert GF(7).scalar(Fraction(1, 2)).value == 4  # 2*4 = 8 = 1 mod 7

    def test_nonprime_modulus_rejected(self):
        for bad in (0, 1, 4, 6, 9, 15):
            with pytest.raises(ValueError):
                Field(bad)
        GF(2), GF(97)  # fine

    def test_rational_field_laws_randomized(self):
        rng = random.Random(7)
        for _ in range(200):
            a, b, c = (
                QQ.scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
                for _ in range(3)
            )
            assert a + b == b + a
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c

    def test_prime_field_agrees_with_rationals_mod_p(self):
        rng = random.Random(11)
        p = 13
        field = GF(p)
        for _ in range(200):
            a, b = rng.randint(-50, 50), rng.randint(-50, 50)
            assert field.scalar(a) + field.scalar(b) == field.scalar(a + b)
            assert field.scalar(a) * field.scalar(b) == field.scalar(a * b)


class TestBinomials:
    def test_examples(self):
        assert binomial(4, 2) == 6
        assert binomial(3, 5) == 0
        for n in range(12):
            assert binomial(n, 0) == 1

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 2)

    def test_falling_factorial(self):
        assert falling_factorial(5, 3) == 60
        assert falling_factorial(2, 4) == 0  # the factor (2 - 2) occurs
        for s in range(-3, 6):
            assert falling_factorial(s, 0) == 1
        assert falling_factorial(-1, 3) == -6


class TestAlternatingBinomialSum:
    def test_collapse_at_top(self):
        assert binomial_alternating_sum(4, 2, 2) == QQ.scalar(6)

    def test_vanishing_below(self):
        assert binomial_alternating_sum(4, 2, 1).is_zero
        assert binomial_alternating_sum(5, 3, 0).is_zero

    def test_full_grid(self):
        for n in range(2, 13):
            for d in range(1, n):
                for a in range(d + 1):
                    value = binomial_alternating_sum(n, d, a)
                    expected = binomial(n, d) if a == d else 0
                    assert value.value == expected, (n, d, a)

    def test_falling_factorial_equivalent_form(self):
        # sum_j (-1)^j C(r,j) ff(s+j, r-1) = 0: the r-th finite difference of
        # a degree r-1 polynomial
        for r in range(1, 9):
            for s in range(0, 9):
                total = sum(
                    (-1) ** j * binomial(r, j) * falling_factorial(s + j, r - 1)
                    for j in range(r + 1)
                )
                assert total == 0, (r, s)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            binomial_alternating_sum(3, 3, 0)
        with pytest.raises(ValueError):
            binomial_alternating_sum(4, 2, 3)


class TestCharDividesBinomial:
    def test_rationals_never(self):
        assert not char_divides_binomial(QQ, 3, 2)

    def test_f3_divides(self):
        assert char_divides_binomial(GF(3), 3, 2)  # C(3,2) = 3

    def test_f2_does_not(self):
        assert not char_divides_binomial(GF(2), 3, 2)

    def test_validation(self):
        with pytest.raises(ValueError):
            char_divides_binomial(QQ, 2, 3)
