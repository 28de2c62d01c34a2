"""Generating functions for Schroeder trees counted by leaves.

Notation used throughout:

* ``S(x)``: trees by leaves, ``S = 2x / (1 + x + sqrt(D))`` with ``D = 1 - 6x + x^2``.
* ``A(x)``: context factor ``(3 - x + sqrt D) / (4 sqrt D)``. Multiplying a
  "property of the root" series by ``A`` counts vertices with that property
  over all trees.
* ``V(x, y)``: trees by leaves (x) and vertices (y); ``R_k(x) = [y^k] V``.
* ``T_k = R_k * A``: vertices whose subtree has exactly ``k`` vertices.
* ``B_k^*``: trees whose root is balanced of rank ``k``; ``B_k = B_k^* * A``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

import mpmath

from .series import (
    DEFAULT_ORDER,
    BiSeries,
    Polynomial,
    RationalFunction,
    UniSeries,
    compose_step,
    prefix_cached,
)

# R_k via the bivariate series for k up to this; the vertex-count formula above it
BIVARIATE_K_LIMIT = 40


@prefix_cached
def _sqrt_discriminant(order: int) -> UniSeries:
    return UniSeries([1, -6, 1], order).sqrt()


@prefix_cached
def schroeder_series(order: int = DEFAULT_ORDER) -> UniSeries:
    """``S(x) = 2x / (1 + x + sqrt(1 - 6x + x^2))``; ``[x^n]`` counts trees with n leaves."""
    if order < 1:
        raise ValueError("order must be >= 1")
    root = _sqrt_discriminant(order)
    return UniSeries([0, 2], order) / (root + UniSeries([1, 1], order))


@prefix_cached
def context_series(order: int = DEFAULT_ORDER) -> UniSeries:
    """Context factor ``A(x) = (3 - x + sqrt D) / (4 sqrt D)``; ``[x^n] A = (n+1) s_{n+1}``."""
    root = _sqrt_discriminant(order)
    return (root + UniSeries([3, -1], order)) / (root * 4)


def context_series_from_trees(order: int = DEFAULT_ORDER) -> UniSeries:
    """``A = 1 / (2 - (1 - S)^-2)``, obtained from ``T = R + T * sum_{m>=2} m S^(m-1)``."""
    s = schroeder_series(order)
    one_minus = 1 - s
    return 1 / (2 - 1 / (one_minus * one_minus))


def schroeder_residual(order: int = DEFAULT_ORDER) -> UniSeries:
    """``2S^2 - (1 + x)S + x``; the zero series when ``S`` is right."""
    s = schroeder_series(order)
    return s * s * 2 - s * UniSeries([1, 1], order) + UniSeries.x(order)


def context_residual(order: int = DEFAULT_ORDER) -> UniSeries:
    """``A (2 - (1 - S)^-2) - 1``."""
    s, a = schroeder_series(order), context_series(order)
    one_minus = 1 - s
    return a * (2 - 1 / (one_minus * one_minus)) - 1


# --------------------------------------------------------------------------
# bivariate series V(x, y) = R(x, y)


@lru_cache(maxsize=8)
def vertex_bivariate(order: int = 24) -> BiSeries:
    """``V(x, y)`` with ``x`` marking leaves and ``y`` marking vertices.

    The functional equation ``V = xy + y V^2 / (1 - V)`` is cleared of its
    denominator to ``V = xy - xy V + (1 + y) V^2``; since ``V`` has no constant
    term in ``x``, the right side at ``x^n`` only involves lower coefficients, so
    each pass of the iteration fixes one more coefficient exactly.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    y = Polynomial.x()
    one_plus_y = Polynomial([1, 1])
    v = [Polynomial(), y]
    for n in range(2, order + 1):
        acc = Polynomial()
        for i in range(1, n):
            if not v[i].is_zero() and not v[n - i].is_zero():
                acc = acc + v[i] * v[n - i]
        v.append(acc * one_plus_y - v[n - 1] * y)
    return BiSeries(v[: order + 1], order)


def vertex_bivariate_closed_form(order: int = 24) -> BiSeries:
    """``(1 + xy - sqrt((xy)^2 + 2xy + 1 - 4xy(y + 1))) / (2y + 2)``.

    The division by ``2y + 2`` is exact polynomial division per ``x``-power;
    a remainder means something upstream is wrong and raises ``ArithmeticError``.
    """
    y = Polynomial.x()
    radicand = BiSeries([Polynomial([1]), Polynomial([0, -2, -4]), Polynomial([0, 0, 1])], order)
    numerator = BiSeries([Polynomial([1]), y], order) - radicand.sqrt()
    return numerator.exact_div_y(Polynomial([2, 2]))


def vertex_bivariate_residual(order: int = 24) -> BiSeries:
    """``V - xy - y V^2 / (1 - V)``."""
    v = vertex_bivariate(order)
    y = Polynomial.x()
    xy = BiSeries([Polynomial(), y], order)
    return v - xy - (v * v * y) / (1 - v)


# --------------------------------------------------------------------------
# R_k, T_k, V


def tree_count(leaves: int, vertices: int) -> int:
    """Schroeder trees with the given numbers of leaves and vertices.

    Counting by vertices, a tree is ``z * (x + F^2 / (1 - F))``; Lagrange
    inversion gives ``(1/k) C(k, n) C(n - 2, k - n - 1)`` for ``k > n`` vertices
    and ``n`` leaves.
    """
    n, k = leaves, vertices
    if n < 1 or k < 1:
        return 0
    if k == n:
        return 1 if k == 1 else 0
    if k < n or n < 2:
        return 0
    return comb(k, n) * comb(n - 2, k - n - 1) // k


@lru_cache(maxsize=None)
def _root_poly_counting(k: int) -> Polynomial:
    return Polynomial(tree_count(n, k) for n in range(k + 1))


def subtree_root_poly(k: int, method: str = "auto") -> Polynomial:
    """``R_k(x) = [y^k] V(x, y)``: trees with exactly ``k`` vertices, by leaves.

    ``method="bivariate"`` extracts the coefficient from ``vertex_bivariate``,
    ``method="counting"`` uses the closed count from :func:`tree_count`; ``auto``
    picks the former for small ``k``. Both must agree and the tests check it.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if method == "auto":
        method = "bivariate" if k <= BIVARIATE_K_LIMIT else "counting"
    if method == "bivariate":
        # x-degree of R_k is at most max(1, k - 1)
        return vertex_bivariate(max(k, BIVARIATE_K_LIMIT)).coeff_y(k)
    if method == "counting":
        return _root_poly_counting(k)
    raise ValueError(f"unknown method {method!r}")


def subtree_series(k: int, order: int = DEFAULT_ORDER) -> UniSeries:
    """``T_k = R_k * A``: vertices with size-``k`` subtrees, over all trees by leaves."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return context_series(order) * subtree_root_poly(k).to_series(order)


def leaf_series(order: int = DEFAULT_ORDER) -> UniSeries:
    """``L(x) = x * A(x)``; equals ``n s_n`` at ``x^n``."""
    return subtree_series(1, order)


@prefix_cached
def vertex_series(order: int = DEFAULT_ORDER) -> UniSeries:
    """``V(x) = S * A``: total vertices over all trees with n leaves."""
    return schroeder_series(order) * context_series(order)


def vertex_series_from_bivariate(order: int = 24) -> UniSeries:
    """``dV(x, y)/dy`` at ``y = 1``."""
    return vertex_bivariate(order).d_dy_at_1()


def _coefficient_of_product(p: Polynomial, order: int, n: int) -> Fraction:
    a = context_series(order)
    return sum((p[j] * a[n - j] for j in range(min(n, p.degree) + 1)), Fraction(0))


def finite_probability(k: int, n: int) -> Fraction:
    """Exact fraction of vertices with a size-``k`` subtree over all ``n``-leaf trees."""
    if n < 1:
        raise ValueError("n must be >= 1 (no vertices at n = 0)")
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > 2 * n - 1:
        return Fraction(0)
    num = _coefficient_of_product(subtree_root_poly(k), n, n)
    return num / vertex_series(n)[n]


def finite_balanced_probability(k: int, n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be >= 1 (no vertices at n = 0)")
    return balanced_series(k, n)[n] / vertex_series(n)[n]


# --------------------------------------------------------------------------
# asymptotics


def asymptotic_estimate(which: str, n: int, dps: int = 30) -> mpmath.mpf:
    """Leading-order estimates for trees ``s_n``, leaves ``n s_n`` and vertices ``V(n)``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    with mpmath.workdps(dps):
        g = 3 + mpmath.sqrt(8)
        if which == "trees":
            return (1 + mpmath.sqrt(2)) * mpmath.mpf(n - 1) ** mpmath.mpf(-1.5) / (
                mpmath.mpf(2) ** mpmath.mpf(1.75) * mpmath.sqrt(mpmath.pi)
            ) * g ** (n - 1)
        if which == "leaves":
            return (1 + mpmath.sqrt(2)) * mpmath.mpf(n - 1) ** mpmath.mpf(-0.5) / (
                mpmath.mpf(2) ** mpmath.mpf(1.75) * mpmath.sqrt(mpmath.pi)
            ) * g ** (n - 1)
        if which == "vertices":
            return g**n / (mpmath.mpf(2) ** mpmath.mpf(2.25) * mpmath.sqrt(mpmath.pi * n))
    raise ValueError(f"unknown quantity {which!r}")


def exact_count(which: str, n: int) -> int:
    if which == "trees":
        c = schroeder_series(n)[n]
    elif which == "leaves":
        c = n * schroeder_series(n)[n]
    elif which == "vertices":
        c = vertex_series(n)[n]
    else:
        raise ValueError(f"unknown quantity {which!r}")
    return int(c)


def asymptotic_ratio(which: str, n: int, dps: int = 30) -> mpmath.mpf:
    with mpmath.workdps(dps):
        return asymptotic_estimate(which, n, dps) / mpmath.mpf(exact_count(which, n))


# --------------------------------------------------------------------------
# balanced vertices of rank k


@lru_cache(maxsize=None)
def balanced_root_ratfun(k: int) -> RationalFunction:
    """``B_k^*``: trees whose root is balanced of rank ``k``; ``B_0^* = x``."""
    if k < 0:
        raise ValueError("rank must be >= 0")
    if k == 0:
        return RationalFunction(Polynomial.x())
    return compose_step(balanced_root_ratfun(k - 1))


def balanced_series(k: int, order: int = DEFAULT_ORDER) -> UniSeries:
    """``B_k = B_k^* * A``: balanced rank-``k`` vertices over all trees by leaves.

    Iterates ``B -> B^2 / (1 - B)`` on truncated series; the exact rational
    function has degree about ``2^k`` and is only worth building for small ``k``.
    """
    if k < 0:
        raise ValueError("rank must be >= 0")
    b = UniSeries.x(order)
    for _ in range(k):
        if b.is_zero():
            break
        b = b * b / (1 - b)
    return b * context_series(order)
