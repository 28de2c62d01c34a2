"""Exactly uniform random Schroeder trees by the recursive counting method.

A tree with ``n > 1`` leaves is a root over a sequence of at least two trees.
Write ``P(n)`` for the number of nonempty sequences of trees with ``n`` leaves
in total, so that ``P(n) = s_n + sum_j s_j P(n - j)`` and the number of trees
with an internal root is ``sum_j s_j P(n - j)`` (first child, then a nonempty
rest). Every choice is drawn with probability proportional to an exact big
integer count, so the output is uniform over all ``s_n`` trees.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .oracle import LEAF, PlaneTree, tree_stats


class CountTables:
    """``s_n`` and ``P(n)`` for ``n <= n_max``, as Python ints."""

    def __init__(self, n_max: int):
        s = [0, 1]
        p = [0, 1]
        for n in range(2, n_max + 1):
            internal = sum(s[j] * p[n - j] for j in range(1, n))
            s.append(internal)
            p.append(s[n] + internal)
        self.n_max = n_max
        self.trees = s
        self.forests = p


def _pick(rng: random.Random, weights: list[int]) -> int:
    """Index ``i`` with probability ``weights[i] / sum(weights)``; ``randrange``
    on the exact total is unbiased for arbitrarily large integers."""
    u = rng.randrange(sum(weights))
    for i, w in enumerate(weights):
        if u < w:
            return i
        u -= w
    raise AssertionError("unreachable")


class SchroederSampler:
    def __init__(self, n_max: int):
        self.tables = CountTables(n_max)

    def _extend(self, n: int):
        if n > self.tables.n_max:
            self.tables = CountTables(n)

    def tree(self, n: int, rng: random.Random) -> PlaneTree:
        self._extend(n)
        return self._tree(n, rng)

    def _tree(self, n: int, rng: random.Random) -> PlaneTree:
        if n == 1:
            return LEAF
        s, p = self.tables.trees, self.tables.forests
        j = 1 + _pick(rng, [s[j] * p[n - j] for j in range(1, n)])
        return (self._tree(j, rng),) + self._forest(n - j, rng)

    def _forest(self, n: int, rng: random.Random) -> tuple:
        s, p = self.tables.trees, self.tables.forests
        out = []
        # pick: whole remainder is one tree, or a first tree of j leaves plus more
        while True:
            weights = [s[n]] + [s[j] * p[n - j] for j in range(1, n)]
            i = _pick(rng, weights)
            if i == 0:
                out.append(self._tree(n, rng))
                return tuple(out)
            out.append(self._tree(i, rng))
            n -= i


def sample_uniform(n: int, seed: int = 0) -> PlaneTree:
    """One uniform Schroeder tree with ``n`` leaves, deterministic in ``seed``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return SchroederSampler(n).tree(n, random.Random(seed))


def sample_many(n: int, count: int, seed: int = 0) -> list[PlaneTree]:
    sampler = SchroederSampler(n)
    rng = random.Random(seed)
    return [sampler.tree(n, rng) for _ in range(count)]


def parse_statistic(spec: str) -> tuple[str, int]:
    """``"leaf"``, ``"subtree:K"`` or ``"balanced:K"`` -> (kind, k)."""
    if spec == "leaf":
        return "subtree", 1
    kind, _, k = spec.partition(":")
    if kind not in ("subtree", "balanced") or not k.isdigit():
        raise ValueError(f"bad statistic {spec!r}")
    return kind, int(k)


def count_statistic(t: PlaneTree, kind: str, k: int) -> tuple[int, int]:
    """(vertices with the statistic, total vertices) for one tree."""
    st = tree_stats(t)
    hits = st.subtree_sizes[k] if kind == "subtree" else st.balanced_ranks[k]
    return hits, st.vertices


@dataclass(frozen=True)
class MonteCarloEstimate:
    n: int
    trials: int
    seed: int
    statistic: str
    hits: int
    vertices: int
    estimate: float
    stderr: float

    def to_json(self) -> dict:
        return {
            "leaves": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "statistic": self.statistic,
            "hits": str(self.hits),
            "vertices": str(self.vertices),
            "estimate": f"{self.estimate:.6f}",
            "stderr": f"{self.stderr:.6f}",
        }


def monte_carlo_census(n: int, trials: int, seed: int = 0, statistic: str = "leaf") -> MonteCarloEstimate:
    """Ratio estimator ``sum(hits) / sum(vertices)`` over uniform trees, with a
    delta-method standard error."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    kind, k = parse_statistic(statistic)
    sampler = SchroederSampler(n)
    rng = random.Random(seed)
    xs, ys = [], []
    for _ in range(trials):
        x, y = count_statistic(sampler.tree(n, rng), kind, k)
        xs.append(x)
        ys.append(y)
    sx, sy = sum(xs), sum(ys)
    r = sx / sy
    if trials > 1:
        ybar = sy / trials
        resid = sum((x - r * y) ** 2 for x, y in zip(xs, ys)) / (trials - 1)
        se = math.sqrt(resid / trials) / ybar
    else:
        se = float("nan")
    return MonteCarloEstimate(n, trials, seed, statistic, sx, sy, r, se)
