import random
from fractions import Fraction

import pytest

from symorbits import GF, QQ, ExactMatrix, in_span, rank


def naive_rank(field, rows):
    """Independent oracle: plain Gauss over the field, no Bareiss."""
    m = [[field.coerce(x) for x in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != field.zero), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(x, inv) for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != field.zero:
                factor = m[i][c]
                m[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


class TestRank:
    def test_identity(self):
        m = ExactMatrix(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert rank(m) == 3

    def test_proportional_rows(self):
        assert rank(ExactMatrix(QQ, [[1, 2], [2, 4]])) == 1

    def test_f2_all_ones(self):
        assert rank(ExactMatrix(GF(2), [[1, 1], [1, 1]])) == 1

    def test_rational_entries(self):
        singular = ExactMatrix(QQ, [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
        assert rank(singular) == naive_rank(QQ, singular.rows) == 1
        regular = ExactMatrix(QQ, [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 2]])
        assert rank(regular) == naive_rank(QQ, regular.rows) == 2

    def test_zero_matrix(self):
        assert rank(ExactMatrix(QQ, [[0, 0], [0, 0]])) == 0

    def test_against_naive_gauss_randomized(self):
        rng = random.Random(61)
        for field in (QQ, GF(5), GF(2)):
            for _ in range(40):
                nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
                rows = [[rng.randint(-4, 4) for _ in range(ncols)] for _ in range(nrows)]
                m = ExactMatrix(field, rows)
                assert rank(m) == naive_rank(field, rows)

    def test_rank_equals_transpose_rank(self):
        rng = random.Random(67)
        for _ in range(40):
            rows = [[Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                     for _ in range(rng.randint(1, 5))]]
            rows *= 1
            nrows = rng.randint(1, 5)
            ncols = len(rows[0])
            m = ExactMatrix(
                QQ,
                [[Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(ncols)]
                 for _ in range(nrows)],
            )
            assert rank(m) == rank(m.transpose())


class TestInSpan:
    def test_examples(self):
        m = ExactMatrix.from_columns(QQ, [[1, 1], [0, 1]])  # e1+e2, e2
        ok, cert = in_span([1, 0], m)
        assert ok
        assert [c.value for c in cert] == [1, -1]

        m2 = ExactMatrix.from_columns(QQ, [[0, 1]])
        ok, cert = in_span([1, 0], m2)
        assert not ok and cert is None

    def test_column_contained(self):
        rng = random.Random(71)
        for _ in range(20):
            cols = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(3)]
            m = ExactMatrix.from_columns(QQ, cols)
            ok, cert = in_span(cols[1], m)
            assert ok

    def test_dimension_mismatch(self):
        m = ExactMatrix.from_columns(QQ, [[1, 0]])
        with pytest.raises(ValueError):
            in_span([1, 0, 0], m)

    def test_agrees_with_rank_augmentation(self):
        rng = random.Random(73)
        for field in (QQ, GF(5)):
            for _ in range(60):
                nrows = rng.randint(1, 5)
                ncols = rng.randint(1, 6)
                cols = [[rng.randint(-3, 3) for _ in range(nrows)] for _ in range(ncols)]
                v = [rng.randint(-3, 3) for _ in range(nrows)]
                m = ExactMatrix.from_columns(field, cols)
                augmented = ExactMatrix.from_columns(field, cols + [v])
                ok, cert = in_span(v, m)
                assert ok == (rank(augmented) == rank(m))

    def test_certificates_reverify(self):
        rng = random.Random(79)
        for field in (QQ, GF(7)):
            for _ in range(40):
                nrows = rng.randint(1, 5)
                ncols = rng.randint(1, 6)
                cols = [[rng.randint(-3, 3) for _ in range(nrows)] for _ in range(ncols)]
                # force membership by combining columns
                weights = [rng.randint(-2, 2) for _ in range(ncols)]
                v = [
                    sum(w * cols[j][i] for j, w in enumerate(weights))
                    for i in range(nrows)
                ]
                m = ExactMatrix.from_columns(field, cols)
                ok, cert = in_span(v, m)
                assert ok
                for i in range(nrows):
                    total = field.zero
                    for j, c in enumerate(cert):
                        total = field.add(total, field.mul(field.coerce(cols[j][i]), c.value))
                    assert total == field.coerce(v[i])
