"""Truncated power series, polynomials and rational functions over Q.

Coefficients are ``Fraction`` throughout. The tree series all have integer
coefficients that grow like (3 + sqrt 8)^n, so convolutions scale both operands
to integers first and do the inner products on plain ``int``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm
import threading
from typing import Callable, Iterable, Sequence

DEFAULT_ORDER = 64


class ValuationError(ArithmeticError):
    """Raised when a divisor or square-root argument has the wrong constant term."""


def _to_frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def _common_denominator(cs: Sequence[Fraction]) -> int:
    return reduce(lcm, (c.denominator for c in cs), 1)


def _as_ints(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    d = _common_denominator(cs)
    return [c.numerator * (d // c.denominator) for c in cs], d


def _convolve(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    """First ``n`` coefficients of the product of ``a`` and ``b``."""
    ia, da = _as_ints(a)
    ib, db = _as_ints(b)
    la, lb = len(ia), len(ib)
    out = []
    for k in range(n):
        lo, hi = max(0, k - lb + 1), min(k, la - 1)
        s = 0
        for i in range(lo, hi + 1):
            s += ia[i] * ib[k - i]
        out.append(Fraction(s, da * db))
    return out


def prefix_cached(fn: Callable[[int], UniSeries]) -> Callable[[int], UniSeries]:
    """Cache the longest series computed so far and truncate for smaller orders."""
    best: dict[str, UniSeries] = {}
    lock = threading.Lock()

    def wrapper(order: int = DEFAULT_ORDER) -> UniSeries:
        with lock:
            s = best.get("s")
        if s is not None and s.order >= order:
            return s.truncate(order)
        s = fn(order)
        with lock:
            if "s" not in best or best["s"].order < order:
                best["s"] = s
        return s

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    wrapper.cache_clear = best.clear
    return wrapper


def _norm(q):
    # sequential recurrences run much faster on plain ints
    if isinstance(q, Fraction) and q.denominator == 1:
        return q.numerator
    return q


# --------------------------------------------------------------------------
# Polynomial


class Polynomial:
    """Dense polynomial with exact rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_to_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _coerce(v) -> "Polynomial":
        if isinstance(v, Polynomial):
            return v
        if isinstance(v, (int, Fraction)):
            return Polynomial([v])
        raise TypeError(f"cannot coerce {type(v).__name__} to Polynomial")

    def __add__(self, other):
        try:
            o = Polynomial._coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        try:
            o = Polynomial._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return Polynomial._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        n = len(self.coeffs) + len(other.coeffs) - 1
        return Polynomial(_convolve(self.coeffs, other.coeffs, n))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = Polynomial([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, lead = other.degree, other.coeffs[-1]
        if len(rem) - 1 < dd:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1 - dd, -1, -1):
            q = rem[i + dd] / lead
            quot[i] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[i + j] -= q * c
        return Polynomial(quot), Polynomial(rem)

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * (1 / self.coeffs[-1])

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, divmod(a, b)[1]
        return a.monic()

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, point):
        """Horner evaluation at anything supporting ``*`` and ``+`` with Fractions."""
        acc = 0 * point
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def to_series(self, order: int = DEFAULT_ORDER) -> "UniSeries":
        return UniSeries(self.coeffs, order)

    def format(self, var: str = "x") -> str:
        """Ascending-power rendering, e.g. ``5x^4+9x^5+x^6``."""
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self):
        return f"Polynomial({self.format()})"

    __str__ = format


# --------------------------------------------------------------------------
# RationalFunction


class RationalFunction:
    """``numerator / denominator`` in lowest terms, denominator(0) == 1.

    Normalising the constant term of the denominator to 1 makes the stored pair
    canonical, so ``==`` is structural equality.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=None):
        num = Polynomial._coerce(numerator)
        den = Polynomial([1]) if denominator is None else Polynomial._coerce(denominator)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den) if not num.is_zero() else den.monic()
        num, den = num.exact_div(g), den.exact_div(g)
        c0 = den[0]
        if c0 == 0:
            raise ValuationError("denominator has zero constant term after reduction")
        self.numerator = num * (1 / c0)
        self.denominator = den * (1 / c0)

    @staticmethod
    def _coerce(v) -> "RationalFunction":
        if isinstance(v, RationalFunction):
            return v
        return RationalFunction(v)

    def __eq__(self, other):
        try:
            o = RationalFunction._coerce(other)
        except TypeError:
            return NotImplemented
        return self.numerator == o.numerator and self.denominator == o.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __add__(self, other):
        o = RationalFunction._coerce(other)
        return RationalFunction(
            self.numerator * o.denominator + o.numerator * self.denominator,
            self.denominator * o.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-RationalFunction._coerce(other))

    def __rsub__(self, other):
        return RationalFunction._coerce(other) - self

    def __mul__(self, other):
        o = RationalFunction._coerce(other)
        return RationalFunction(self.numerator * o.numerator, self.denominator * o.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunction._coerce(other)
        if o.numerator.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.numerator * o.denominator, self.denominator * o.numerator)

    def __rtruediv__(self, other):
        return RationalFunction._coerce(other) / self

    def __call__(self, point):
        d = self.denominator(point)
        if not d:
            raise ZeroDivisionError(f"denominator vanishes at {point}")
        return self.numerator(point) / d

    def to_series(self, order: int = DEFAULT_ORDER) -> "UniSeries":
        return self.numerator.to_series(order) / self.denominator.to_series(order)

    def format(self, var: str = "x") -> str:
        if self.denominator == Polynomial([1]):
            return self.numerator.format(var)
        return f"({self.numerator.format(var)})/({self.denominator.format(var)})"

    def __repr__(self):
        return f"RationalFunction({self.format()})"


def compose_step(f: RationalFunction) -> RationalFunction:
    """``f^2 / (1 - f)``: sequences of at least two objects counted by ``f``."""
    f = RationalFunction._coerce(f)
    return f * f / (1 - f)


def ratfun_arith(op: str, f, g=None) -> RationalFunction:
    f = RationalFunction._coerce(f)
    if op == "compose_step":
        return compose_step(f)
    g = RationalFunction._coerce(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown operation {op!r}")


# --------------------------------------------------------------------------
# UniSeries


class UniSeries:
    """Power series truncated after ``x^order`` (so ``order + 1`` coefficients)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable = (), order: int = DEFAULT_ORDER):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [_to_frac(c) for c in list(coeffs)[: order + 1]]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list[Fraction], order: int) -> "UniSeries":
        s = object.__new__(cls)
        s.order = order
        s.coeffs = tuple(coeffs)
        return s

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> "UniSeries":
        return cls([0, 1], order)

    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER) -> "UniSeries":
        return cls([c], order)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self.coeffs[n]
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "UniSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return UniSeries._raw(list(self.coeffs[: order + 1]), order)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniSeries):
            n = min(self.order, other.order)
            return self.coeffs[: n + 1] == other.coeffs[: n + 1]
        return NotImplemented

    __hash__ = None

    def _coerce(self, other) -> "UniSeries":
        if isinstance(other, UniSeries):
            return other
        if isinstance(other, Polynomial):
            return other.to_series(self.order)
        if isinstance(other, (int, Fraction)):
            return UniSeries.constant(other, self.order)
        raise TypeError(f"cannot coerce {type(other).__name__} to UniSeries")

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = min(self.order, o.order)
        return UniSeries._raw([self.coeffs[i] + o.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return UniSeries._raw([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniSeries._raw([c * other for c in self.coeffs], self.order)
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = min(self.order, o.order)
        return UniSeries._raw(_convolve(self.coeffs[: n + 1], o.coeffs[: n + 1], n + 1), n)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = UniSeries.constant(1, self.order), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "UniSeries":
        return UniSeries.constant(1, self.order) / self

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return ser_div(self, o)

    def __rtruediv__(self, other):
        return ser_div(self._coerce(other), self)

    def sqrt(self) -> "UniSeries":
        return ser_sqrt(self)

    def derivative(self) -> "UniSeries":
        if self.order == 0:
            return UniSeries([], 0)
        return UniSeries._raw([i * self.coeffs[i] for i in range(1, self.order + 1)], self.order - 1)

    def shift(self, k: int) -> "UniSeries":
        """Multiply by ``x^k`` (k >= 0), keeping the order."""
        return UniSeries._raw(([Fraction(0)] * k + list(self.coeffs))[: self.order + 1], self.order)

    def integer_coefficients(self) -> list[int]:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(c.numerator)
        return out

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"UniSeries([{shown}{more}], order={self.order})"


def ser_arith(op: str, a: UniSeries, b: UniSeries) -> UniSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def ser_div(a: UniSeries, b: UniSeries) -> UniSeries:
    """Quotient ``q`` with ``q * b == a`` to the smaller truncation order."""
    b0 = b.coeffs[0]
    if b0 == 0:
        raise ValuationError("divisor has zero constant term")
    n = min(a.order, b.order)
    bs = [_norm(c) for c in b.coeffs[: n + 1]]
    q: list = []
    for k in range(n + 1):
        s = a.coeffs[k]
        acc = 0
        for i in range(k):
            acc += q[i] * bs[k - i]
        q.append(_norm((s - acc) / bs[0]))
    return UniSeries._raw([_to_frac(c) for c in q], n)


def ser_sqrt(a: UniSeries) -> UniSeries:
    """Square root with constant term 1, by the coefficient recurrence
    ``2 r_n = a_n - sum_{0<i<n} r_i r_{n-i}``."""
    if a.coeffs[0] != 1:
        raise ValuationError("square root needs constant term 1")
    r: list = [1]
    for n in range(1, a.order + 1):
        acc = 0
        for i in range(1, n):
            acc += r[i] * r[n - i]
        r.append(_norm(Fraction(a.coeffs[n] - acc) / 2))
    return UniSeries._raw([_to_frac(c) for c in r], a.order)


# --------------------------------------------------------------------------
# BiSeries


class BiSeries:
    """Series in ``x`` truncated after ``x^order``; each coefficient is an exact
    polynomial in ``y`` (no truncation in ``y``)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        cs = [Polynomial._coerce(c) for c in list(coeffs)[: order + 1]]
        cs.extend([Polynomial()] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs: tuple[Polynomial, ...] = tuple(cs)

    def __getitem__(self, n: int) -> Polynomial:
        return self.coeffs[n]

    def __eq__(self, other):
        if isinstance(other, BiSeries):
            n = min(self.order, other.order)
            return self.coeffs[: n + 1] == other.coeffs[: n + 1]
        return NotImplemented

    __hash__ = None

    def _coerce(self, other) -> "BiSeries":
        if isinstance(other, BiSeries):
            return other
        return BiSeries([Polynomial._coerce(other)], self.order)

    def __add__(self, other):
        o = self._coerce(other)
        n = min(self.order, o.order)
        return BiSeries([self.coeffs[i] + o.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return BiSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            p = Polynomial._coerce(other)
            return BiSeries([c * p for c in self.coeffs], self.order)
        o = self._coerce(other)
        n = min(self.order, o.order)
        out = []
        for k in range(n + 1):
            acc = Polynomial()
            for i in range(k + 1):
                if self.coeffs[i].is_zero() or o.coeffs[k - i].is_zero():
                    continue
                acc = acc + self.coeffs[i] * o.coeffs[k - i]
            out.append(acc)
        return BiSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "BiSeries":
        if self.coeffs[0] != Polynomial([1]):
            raise ValuationError("bivariate inverse needs constant term 1")
        q = [Polynomial([1])]
        for k in range(1, self.order + 1):
            acc = Polynomial()
            for i in range(1, k + 1):
                if not self.coeffs[i].is_zero():
                    acc = acc + self.coeffs[i] * q[k - i]
            q.append(-acc)
        return BiSeries(q, self.order)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def sqrt(self) -> "BiSeries":
        if self.coeffs[0] != Polynomial([1]):
            raise ValuationError("bivariate square root needs constant term 1")
        r = [Polynomial([1])]
        for n in range(1, self.order + 1):
            acc = Polynomial()
            for i in range(1, n):
                acc = acc + r[i] * r[n - i]
            r.append((self.coeffs[n] - acc) * Fraction(1, 2))
        return BiSeries(r, self.order)

    def exact_div_y(self, p: Polynomial) -> "BiSeries":
        """Divide every ``x``-coefficient by the ``y``-polynomial ``p``; raises
        ``ArithmeticError`` unless each division is exact."""
        return BiSeries([c.exact_div(p) for c in self.coeffs], self.order)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def coeff_y(self, k: int) -> Polynomial:
        """The polynomial in ``x`` collecting the ``y^k`` terms."""
        return Polynomial(c[k] for c in self.coeffs)

    def at_y(self, y) -> UniSeries:
        return UniSeries([c(Fraction(y)) for c in self.coeffs], self.order)

    def d_dy_at_1(self) -> UniSeries:
        """Univariate series of ``d/dy`` evaluated at ``y = 1``."""
        return UniSeries([sum(c.derivative().coeffs, Fraction(0)) for c in self.coeffs], self.order)

    def __repr__(self):
        shown = ", ".join(c.format("y") for c in self.coeffs[:5])
        return f"BiSeries([{shown}, ...], order={self.order})"


def biser_coeff_y(b: BiSeries, k: int) -> Polynomial:
    return b.coeff_y(k)
