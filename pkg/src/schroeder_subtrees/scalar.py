"""Exact scalars: rationals (``fractions.Fraction``) and the field Q(sqrt 2).

Every limit probability for Schroeder trees lives in Q(sqrt 2), because the
dominant singularity 3 - 2*sqrt(2) does. Keeping sqrt(2) symbolic lets us ask
exact questions ("is this ratio exactly 2?") and defer decimals to rendering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt
from numbers import Rational
from typing import Union

Number = Union[int, Fraction]


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot convert {type(v).__name__} to an exact rational")


@dataclass(frozen=True)
class QuadExt:
    """The number ``rational_part + sqrt2_coefficient * sqrt(2)``."""

    rational_part: Fraction = Fraction(0)
    sqrt2_coefficient: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "rational_part", _frac(self.rational_part))
        object.__setattr__(self, "sqrt2_coefficient", _frac(self.sqrt2_coefficient))

    @classmethod
    def coerce(cls, v) -> "QuadExt":
        if isinstance(v, QuadExt):
            return v
        return cls(_frac(v), Fraction(0))

    @property
    def a(self) -> Fraction:
        return self.rational_part

    @property
    def b(self) -> Fraction:
        return self.sqrt2_coefficient

    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self) -> "QuadExt":
        n = self.norm()
        # sqrt(2) is irrational, so the norm vanishes only at zero
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt 2)")
        return QuadExt(self.a / n, -self.b / n)

    def __add__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b)

    def __sub__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadExt(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QuadExt.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result, base = QuadExt(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            o = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def sign(self) -> int:
        """Exact sign, decided without any floating point."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        d = a * a - 2 * b * b
        s = (d > 0) - (d < 0)
        return s if a > 0 else -s

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def floor(self) -> int:
        # start from a generous rational approximation of sqrt(2), then fix up exactly
        prec = 40 + abs(self.b).numerator.bit_length() + abs(self.b).denominator.bit_length()
        approx_sqrt2 = Fraction(isqrt(2 << (2 * prec)), 1 << prec)
        g = floor(self.a + self.b * approx_sqrt2)
        while (self - g).sign() < 0:
            g -= 1
        while (self - (g + 1)).sign() >= 0:
            g += 1
        return g

    def __float__(self):
        return float(quad_to_decimal(self, 20))

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt2"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt2"

    def to_json(self, digits: int = 12) -> dict:
        return {
            "rational_part": str(self.a),
            "sqrt2_coefficient": str(self.b),
            "decimal": quad_to_decimal(self, digits),
        }


SQRT2 = QuadExt(0, 1)


def quad_arith(op: str, u, v) -> QuadExt:
    u, v = QuadExt.coerce(u), QuadExt.coerce(v)
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    if op == "div":
        return u / v
    raise ValueError(f"unknown operation {op!r}")


def quad_inverse(u) -> QuadExt:
    return QuadExt.coerce(u).inverse()


def quad_to_decimal(u, digits: int) -> str:
    """Render ``u`` with ``digits`` fractional digits, rounding half to even.

    Ties can only occur for rational inputs; the comparison against one half is
    done exactly in Q(sqrt 2).
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    u = QuadExt.coerce(u)
    scaled = u * (10**digits)
    g = scaled.floor()
    c = (scaled - g - Fraction(1, 2)).sign()
    if c > 0 or (c == 0 and g % 2 == 1):
        g += 1
    neg = g < 0
    s = str(abs(g)).rjust(digits + 1, "0")
    out = f"{s[:-digits]}.{s[-digits:]}"
    return "-" + out if neg else out


def rational_to_decimal(q: Number, digits: int) -> str:
    return quad_to_decimal(QuadExt.coerce(q), digits)
