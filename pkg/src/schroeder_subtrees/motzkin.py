"""Motzkin (unary-binary) trees counted by vertices.

``M_k`` below is the number of Motzkin trees with ``k`` vertices (1, 1, 2, 4, 9,
21, ...), i.e. the classical Motzkin number of index ``k - 1``. With this
indexing the tree series is 1 at x = 1/3, so the limit probabilities
``M_k / 3^k`` sum to one.
"""

from __future__ import annotations

from fractions import Fraction

from .series import DEFAULT_ORDER, UniSeries, prefix_cached

SINGULARITY = Fraction(1, 3)


@prefix_cached
def motzkin_tree_series(order: int = DEFAULT_ORDER) -> UniSeries:
    """``T = x (1 + T + T^2)``, solved coefficient by coefficient."""
    if order < 1:
        raise ValueError("order must be >= 1")
    t = [0, 1]
    for n in range(2, order + 1):
        t.append(t[n - 1] + sum(t[i] * t[n - 1 - i] for i in range(1, n - 1)))
    return UniSeries(t, order)


def motzkin_count(k: int) -> int:
    """``M_k``: Motzkin trees with ``k`` vertices."""
    return int(motzkin_tree_series(max(k, 1))[k])


def motzkin_residual(order: int = DEFAULT_ORDER) -> UniSeries:
    t = motzkin_tree_series(order)
    return t - (1 + t + t * t).shift(1)


@prefix_cached
def motzkin_context_series(order: int = DEFAULT_ORDER) -> UniSeries:
    """``1 / sqrt(1 - 2x - 3x^2)``."""
    return 1 / UniSeries([1, -2, -3], order).sqrt()


def motzkin_subtree_series(k: int, order: int = DEFAULT_ORDER) -> UniSeries:
    """``M_k x^k / sqrt(1 - 2x - 3x^2)``: vertices with size-``k`` subtrees."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return (motzkin_context_series(order) * motzkin_count(k)).shift(k)


def motzkin_vertex_series(order: int = DEFAULT_ORDER) -> UniSeries:
    """Total vertices over all trees of size n, ``x T'(x)``; equal to ``T / sqrt(1 - 2x - 3x^2)``."""
    t = motzkin_tree_series(order)
    return UniSeries([n * c for n, c in enumerate(t)], order)


def motzkin_limit_probability(k: int) -> Fraction:
    if k < 1:
        raise ValueError("k must be >= 1")
    return Fraction(motzkin_count(k), 3**k)
