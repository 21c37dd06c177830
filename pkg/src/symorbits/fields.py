"""Exact coefficient arithmetic over the rationals and over prime fields.

Raw coefficient values are `fractions.Fraction` over the rationals and
plain `int` residues in [0, p) over a prime field.  Containers such as
polynomials and matrices store raw values together with a `Field` tag;
`Scalar` bundles a raw value with its field for use at API boundaries.
No floating point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Raw = Fraction | int


def is_prime(n: int) -> bool:
    """Deterministic trial division; meant for desk-scale moduli."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rational numbers (``p is None``) or the prime field with p elements."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not a prime >= 2")

    @property
    def characteristic(self) -> int:
        return self.p or 0

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def __repr__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    # Raw-value arithmetic.  All containers in this package keep raw values
    # and call these; `Scalar` wraps them with the operator protocol.

    @property
    def zero(self) -> Raw:
        return Fraction(0) if self.p is None else 0

    @property
    def one(self) -> Raw:
        return Fraction(1) if self.p is None else 1

    def coerce(self, x) -> Raw:
        """Normalize an int, Fraction, or Scalar to this field's raw form."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise ValueError(f"scalar over {x.field} used in {self}")
            return x.value
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise TypeError(f"cannot coerce {type(x).__name__} into {self}")
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        return x % self.p

    def add(self, a: Raw, b: Raw) -> Raw:
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a: Raw, b: Raw) -> Raw:
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a: Raw, b: Raw) -> Raw:
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a: Raw) -> Raw:
        return -a if self.p is None else (-a) % self.p

    def inv(self, a: Raw) -> Raw:
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return Fraction(1) / a
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        return pow(a, self.p - 2, self.p)

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def pow(self, a: Raw, e: int) -> Raw:
        if e < 0:
            return self.inv(self.pow(a, -e))
        return a**e if self.p is None else pow(a, e, self.p)

    def scalar(self, x) -> "Scalar":
        return Scalar(self, self.coerce(x))


QQ = Field()


def GF(p: int) -> Field:
    """The prime field with p elements; p is checked by trial division."""
    return Field(p)


@dataclass(frozen=True)
class Scalar:
    """An exact field element tagged by its field.

    Rational values are reduced fractions with positive denominator
    (guaranteed by `Fraction`); prime-field values are residues in [0, p).
    Arithmetic between scalars of different fields raises ValueError.
    """

    field: Field
    value: Raw

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _rhs(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._rhs(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._rhs(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._rhs(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._rhs(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._rhs(other)))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._rhs(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return Scalar(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    @property
    def is_zero(self) -> bool:
        return self.value == self.field.zero

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.value}, {self.field})"


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial requires nonnegative arguments")
    return math.comb(n, k)


def falling_factorial(s: int, r: int) -> int:
    """s * (s-1) * ... * (s-r+1); the empty product (r = 0) is 1.

    s may be negative; the result is an exact integer.
    """
    if r < 0:
        raise ValueError("falling_factorial requires r >= 0")
    out = 1
    for i in range(r):
        out *= s - i
    return out


def binomial_alternating_sum(n: int, d: int, a: int) -> Scalar:
    """The alternating binomial sum

        C(n-1, d) * sum_{j=0}^{d} (-1)^j C(d-a, j) C(n-d+a, d-j) / C(n-1, d-j)

    as an exact rational.  It collapses to C(n, d) when a = d and to 0
    for every 0 <= a < d; requires 1 <= d <= n-1 and 0 <= a <= d.
    """
    if not 1 <= d <= n - 1:
        raise ValueError(f"need 1 <= d <= n-1, got n={n}, d={d}")
    if not 0 <= a <= d:
        raise ValueError(f"need 0 <= a <= d, got a={a}")
    total = Fraction(0)
    for j in range(d + 1):
        total += (
            (-1) ** j
            * Fraction(binomial(d - a, j) * binomial(n - d + a, d - j), binomial(n - 1, d - j))
        )
    return QQ.scalar(binomial(n - 1, d) * total)


def char_divides_binomial(field: Field, n: int, d: int) -> bool:
    """True iff the field characteristic is positive and divides C(n, d)."""
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got n={n}, d={d}")
    ch = field.characteristic
    return ch > 0 and binomial(n, d) % ch == 0
