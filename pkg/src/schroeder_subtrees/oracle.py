"""Brute-force ground truth: every Schroeder / Motzkin tree of a given size.

Plane trees are nested tuples: a leaf is ``()`` and an internal vertex is the
tuple of its children, left to right. They are immutable, hashable, and compare
structurally, which is all the oracle needs.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator

PlaneTree = tuple

LEAF: PlaneTree = ()

FAMILIES = ("schroeder", "motzkin")
DEFAULT_CAPS = {"schroeder": 10, "motzkin": 14}


class EnumerationCapError(ValueError):
    """Refusal to enumerate beyond the configured size cap."""


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` positive parts, lexicographic."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _schroeder(n: int) -> tuple[PlaneTree, ...]:
    if n == 1:
        return (LEAF,)
    out = []
    for m in range(2, n + 1):
        for comp in compositions(n, m):
            out.extend(product(*(_schroeder(c) for c in comp)))
    return tuple(out)


@lru_cache(maxsize=None)
def _motzkin(n: int) -> tuple[PlaneTree, ...]:
    if n == 1:
        return (LEAF,)
    out = [(c,) for c in _motzkin(n - 1)]
    for comp in compositions(n - 1, 2):
        out.extend(product(*(_motzkin(c) for c in comp)))
    return tuple(out)


def _check(family: str, n: int, cap: int | None):
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 1:
        raise ValueError("size must be >= 1")
    limit = DEFAULT_CAPS[family] if cap is None else cap
    if n > limit:
        raise EnumerationCapError(f"{family} enumeration at n={n} exceeds cap {limit}")


def enumerate_trees(family: str, n: int, cap: int | None = None) -> tuple[PlaneTree, ...]:
    """All trees of the family with size ``n`` (leaves for Schroeder, vertices
    for Motzkin), each exactly once, ordered by root arity, then lexicographic
    child-size composition, then recursively."""
    _check(family, n, cap)
    return _schroeder(n) if family == "schroeder" else _motzkin(n)


def is_schroeder(t: PlaneTree) -> bool:
    return len(t) != 1 and all(is_schroeder(c) for c in t)


def is_motzkin(t: PlaneTree) -> bool:
    return len(t) <= 2 and all(is_motzkin(c) for c in t)


def to_brackets(t: PlaneTree) -> str:
    return "(" + "".join(to_brackets(c) for c in t) + ")"


def from_brackets(s: str) -> PlaneTree:
    stack: list[list] = [[]]
    for ch in s:
        if ch == "(":
            stack.append([])
        elif ch == ")":
            node = tuple(stack.pop())
            stack[-1].append(node)
        else:
            raise ValueError(f"unexpected character {ch!r}")
    if len(stack) != 1 or len(stack[0]) != 1:
        raise ValueError("unbalanced bracket string")
    return stack[0][0]


@dataclass(frozen=True)
class VertexInfo:
    size: int
    rank: int
    height: int

    @property
    def balanced(self) -> bool:
        return self.rank == self.height


@dataclass
class TreeStats:
    leaves: int
    vertices: int
    subtree_sizes: Counter
    balanced_ranks: Counter
    vertex_info: list[VertexInfo] = field(repr=False)

    @property
    def root(self) -> VertexInfo:
        return self.vertex_info[-1]


def tree_stats(t: PlaneTree) -> TreeStats:
    """Per-vertex subtree size, rank (shortest downward path to a leaf) and
    height (longest such path), collected in post-order; the root is last."""
    infos: list[VertexInfo] = []

    def walk(v: PlaneTree) -> VertexInfo:
        if not v:
            info = VertexInfo(1, 0, 0)
        else:
            kids = [walk(c) for c in v]
            info = VertexInfo(
                1 + sum(k.size for k in kids),
                1 + min(k.rank for k in kids),
                1 + max(k.height for k in kids),
            )
        infos.append(info)
        return info

    walk(t)
    return TreeStats(
        leaves=sum(1 for i in infos if i.size == 1),
        vertices=len(infos),
        subtree_sizes=Counter(i.size for i in infos),
        balanced_ranks=Counter(i.rank for i in infos if i.balanced),
        vertex_info=infos,
    )


@dataclass
class CensusTable:
    family: str
    n: int
    statistic: str
    counts: dict[int, int]
    total_trees: int
    total_vertices: int

    def __getitem__(self, k: int) -> int:
        return self.counts.get(k, 0)

    def rows(self) -> list[tuple[str, int, str, int, int]]:
        return [(self.family, self.n, self.statistic, k, c) for k, c in sorted(self.counts.items())]


@lru_cache(maxsize=None)
def _census(family: str, n: int) -> tuple[Counter, Counter, int, int]:
    sizes: Counter = Counter()
    balanced: Counter = Counter()
    trees = vertices = 0
    for t in enumerate_trees(family, n, cap=max(n, DEFAULT_CAPS[family])):
        st = tree_stats(t)
        sizes.update(st.subtree_sizes)
        balanced.update(st.balanced_ranks)
        trees += 1
        vertices += st.vertices
    return sizes, balanced, trees, vertices


def subtree_census(family: str, n: int, cap: int | None = None) -> CensusTable:
    _check(family, n, cap)
    sizes, _, trees, vertices = _census(family, n)
    return CensusTable(family, n, "subtree", dict(sorted(sizes.items())), trees, vertices)


def balanced_census(n: int, cap: int | None = None) -> CensusTable:
    _check("schroeder", n, cap)
    _, bal, trees, vertices = _census("schroeder", n)
    return CensusTable("schroeder", n, "balanced", dict(sorted(bal.items())), trees, vertices)


def census_csv(tables) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", "n", "statistic", "k", "count"])
    for table in tables:
        w.writerows(table.rows())
    return buf.getvalue()
