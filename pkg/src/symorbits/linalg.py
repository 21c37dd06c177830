"""Exact dense linear algebra: rank and span membership with certificates.

Over the rationals, rank uses fraction-free (Bareiss) elimination on an
integer-rescaled copy so intermediate entries stay integral; over a prime
field it uses plain modular elimination.  No floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .fields import Field, Raw, Scalar


class ExactMatrix:
    """Immutable row-major matrix of raw field values."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence]):
        data = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ValueError("ragged rows")
        self.field = field
        self.rows = data
        self.nrows = len(data)
        self.ncols = len(data[0]) if data else 0

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence]) -> "ExactMatrix":
        if not columns:
            return cls(field, [])
        return cls(field, list(zip(*columns)))

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self.rows[i][j])

    def column(self, j: int) -> tuple[Raw, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple[Raw, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, list(zip(*self.rows)) if self.rows else [])

    def __repr__(self) -> str:
        return f"ExactMatrix({self.field}, {self.nrows}x{self.ncols})"


def _integerize_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    # row scaling by the denominator lcm preserves rank
    out = []
    for row in rows:
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def rank(matrix: ExactMatrix) -> int:
    """Exact rank; Bareiss over the rationals, Gaussian over a prime field."""
    if matrix.nrows == 0 or matrix.ncols == 0:
        return 0
    if matrix.field.is_rationals:
        return _rank_bareiss(_integerize_rows(matrix.rows))
    return _rank_prime(matrix)


def _rank_bareiss(m: list[list[int]]) -> int:
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                # fraction-free update: every entry is a minor of the input,
                # so the division by the previous pivot is exact
                row_i[j] = (piv * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        r += 1
    return r


def _rank_prime(matrix: ExactMatrix) -> int:
    p = matrix.field.p
    m = [list(row) for row in matrix.rows]
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if m[i][c] % p != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(r + 1, nrows):
            factor = m[i][c] % p
            if factor:
                m[i] = [(x - factor * y) % p for x, y in zip(m[i], m[r])]
        r += 1
    return r


def in_span(vector: Sequence, matrix: ExactMatrix) -> tuple[bool, list[Scalar] | None]:
    """Decide whether the vector lies in the span of the matrix columns.

    Returns ``(True, certificate)`` with one coefficient per column
    (zeros for unused columns), re-verified by multiplication before
    returning, or ``(False, None)``.  Columns are consumed left to right
    with first-nonzero pivoting, so certificates are reproducible.
    """
    field = matrix.field
    v = [field.coerce(x) for x in vector]
    if len(v) != matrix.nrows:
        raise ValueError(f"vector length {len(v)} != row count {matrix.nrows}")
    zero, one = field.zero, field.one

    def reduce_vec(u: list[Raw], basis: list[tuple[int, list[Raw]]]) -> list[Raw]:
        for piv, b in basis:
            factor = u[piv]
            if factor != zero:
                u = [field.sub(x, field.mul(factor, y)) for x, y in zip(u, b)]
        return u

    basis: list[tuple[int, list[Raw]]] = []  # (pivot row, pivot-normalized vector)
    pivot_columns: list[int] = []
    residual = reduce_vec(list(v), basis)
    seen_columns: set[tuple[Raw, ...]] = set()
    for j in range(matrix.ncols):
        if all(x == zero for x in residual):
            break
        if len(basis) == matrix.nrows:
            break
        col = matrix.column(j)
        if col in seen_columns:
            continue
        seen_columns.add(col)
        u = reduce_vec(list(col), basis)
        piv = next((i for i, x in enumerate(u) if x != zero), None)
        if piv is None:
            continue
        inv = field.inv(u[piv])
        u = [field.mul(x, inv) for x in u]
        basis.append((piv, u))
        pivot_columns.append(j)
        factor = residual[piv]
        if factor != zero:
            residual = [field.sub(x, field.mul(factor, y)) for x, y in zip(residual, u)]

    if any(x != zero for x in residual):
        return False, None

    coeffs = _solve_exact(field, [matrix.column(j) for j in pivot_columns], v)
    certificate = [zero] * matrix.ncols
    for j, c in zip(pivot_columns, coeffs):
        certificate[j] = c
    # re-verify: columns . certificate == vector
    for i in range(matrix.nrows):
        total = zero
        for j, c in enumerate(certificate):
            if c != zero:
                total = field.add(total, field.mul(matrix.rows[i][j], c))
        if total != v[i]:
            raise AssertionError("span certificate failed re-verification")
    return True, [Scalar(field, c) for c in certificate]


def _solve_exact(field: Field, columns: list[tuple[Raw, ...]], v: list[Raw]) -> list[Raw]:
    """Solve sum_j x_j * columns[j] = v for independent columns."""
    if not columns:
        return []
    nrows = len(v)
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [v[i]] for i in range(nrows)]
    zero = field.zero
    row = 0
    pivots = []
    for c in range(k):
        pivot_row = next((i for i in range(row, nrows) if aug[i][c] != zero), None)
        if pivot_row is None:
            raise AssertionError("columns expected to be independent")
        aug[row], aug[pivot_row] = aug[pivot_row], aug[row]
        inv = field.inv(aug[row][c])
        aug[row] = [field.mul(x, inv) for x in aug[row]]
        for i in range(nrows):
            if i != row and aug[i][c] != zero:
                factor = aug[i][c]
                aug[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(aug[i], aug[row])]
        pivots.append(row)
        row += 1
    return [aug[pivots[c]][k] for c in range(k)]
