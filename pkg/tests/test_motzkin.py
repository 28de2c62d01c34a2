from fractions import Fraction

from schroeder_subtrees import oracle
from schroeder_subtrees.motzkin import (
    motzkin_context_series,
    motzkin_count,
    motzkin_limit_probability,
    motzkin_residual,
    motzkin_subtree_series,
    motzkin_tree_series,
    motzkin_vertex_series,
)
from schroeder_subtrees.series import UniSeries


def test_tree_series():
    t = motzkin_tree_series(20)
    assert list(t.coeffs[1:6]) == [1, 1, 2, 4, 9]
    assert motzkin_residual(150).is_zero()
    for n in range(1, 13):
        assert t[n] == len(oracle.enumerate_trees("motzkin", n))


def test_context_series():
    c = motzkin_context_series(10)
    assert list(c.coeffs[:6]) == [1, 1, 3, 7, 19, 51]
    assert c * UniSeries([1, -2, -3], 10).sqrt() == UniSeries([1], 10)


def test_subtree_examples():
    assert motzkin_subtree_series(1, 5)[3] == 3
    assert motzkin_subtree_series(2, 5)[3] == 1
    for n in range(1, 12):
        assert motzkin_subtree_series(n, n)[n] == motzkin_count(n)


def test_subtree_series_match_census():
    for n in range(1, 13):
        census = oracle.subtree_census("motzkin", n)
        for k in range(1, n + 1):
            assert motzkin_subtree_series(k, n)[n] == census[k]


def test_every_vertex_has_one_subtree_size():
    n_max = 30
    t = motzkin_tree_series(n_max)
    v = motzkin_vertex_series(n_max)
    for n in range(1, n_max + 1):
        assert sum(motzkin_subtree_series(k, n)[n] for k in range(1, n + 1)) == n * t[n] == v[n]
    # x T'(x) = T(x) / sqrt(1 - 2x - 3x^2)
    assert v == t * motzkin_context_series(n_max)


def test_limit_probabilities():
    assert motzkin_limit_probability(1) == Fraction(1, 3)
    assert motzkin_limit_probability(3) == Fraction(2, 27)
    sums, total = [], Fraction(0)
    for k in range(1, 61):
        total += motzkin_limit_probability(k)
        sums.append(total)
    assert all(a < b for a, b in zip(sums, sums[1:]))
    assert sums[-1] < 1
