"""Self-checks behind ``verify``: generating functions against enumeration,
functional-equation residuals, and the identities that tie the series together."""

from __future__ import annotations

from dataclasses import dataclass

from . import motzkin as mz
from . import oracle
from . import schroeder as sc
from .series import UniSeries


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _first_mismatch(pairs) -> str:
    for label, got, want in pairs:
        if got != want:
            return f"{label}: series {got} != oracle {want}"
    return ""


def schroeder_checks(n_max: int = 7, order: int = 64) -> list[Check]:
    order = max(order, n_max, 2 * n_max)
    s = sc.schroeder_series(order)
    v = sc.vertex_series(order)
    out = []

    pairs = [(f"n={n}", s[n], len(oracle.enumerate_trees("schroeder", n))) for n in range(1, n_max + 1)]
    out.append(Check("schroeder trees vs enumeration", *_ok(pairs)))

    pairs = []
    for n in range(1, n_max + 1):
        census = oracle.subtree_census("schroeder", n)
        for k in range(1, 2 * n):
            pairs.append((f"n={n} k={k}", sc.subtree_series(k, n)[n], census[k]))
        pairs.append((f"n={n} vertices", v[n], census.total_vertices))
    out.append(Check("subtree series vs census", *_ok(pairs)))

    pairs = []
    for n in range(1, n_max + 1):
        census = oracle.balanced_census(n)
        for k in range(0, n):
            pairs.append((f"n={n} rank={k}", sc.balanced_series(k, n)[n], census[k]))
    out.append(Check("balanced series vs census", *_ok(pairs)))

    pairs = []
    for n in range(1, n_max + 1):
        census = oracle.subtree_census("schroeder", n)
        pairs.append((f"n={n}", sum(census.counts.values()), census.total_vertices))
    out.append(Check("census totals", *_ok(pairs)))

    out.append(_zero("2S^2 - (1+x)S + x", sc.schroeder_residual(order)))
    out.append(_zero("A (2 - (1-S)^-2) - 1", sc.context_residual(order)))
    out.append(
        Check(
            "A closed form == 1/(2 - (1-S)^-2)",
            sc.context_series(order) == sc.context_series_from_trees(order),
        )
    )

    bi_order = max(12, n_max)
    out.append(Check("V - xy - yV^2/(1-V) == 0", sc.vertex_bivariate_residual(bi_order).is_zero()))
    out.append(
        Check(
            "bivariate iteration == closed form",
            sc.vertex_bivariate(bi_order) == sc.vertex_bivariate_closed_form(bi_order),
        )
    )
    out.append(Check("S*A == dV/dy at y=1", sc.vertex_series_from_bivariate(bi_order) == v.truncate(bi_order)))

    # sum of R_k over k <= 2n - 1 reproduces S through x^n
    n_sum = 12
    total = UniSeries([], n_sum)
    for k in range(1, 2 * n_sum):
        total = total + sc.subtree_root_poly(k).to_series(n_sum)
    out.append(Check("sum_k R_k == S through x^12", total == s.truncate(n_sum)))
    return out


def motzkin_checks(n_max: int = 12, order: int = 64) -> list[Check]:
    order = max(order, n_max)
    t = mz.motzkin_tree_series(order)
    out = []
    pairs = [(f"n={n}", t[n], len(oracle.enumerate_trees("motzkin", n))) for n in range(1, n_max + 1)]
    out.append(Check("motzkin trees vs enumeration", *_ok(pairs)))

    pairs = []
    for n in range(1, n_max + 1):
        census = oracle.subtree_census("motzkin", n)
        for k in range(1, n + 1):
            pairs.append((f"n={n} k={k}", mz.motzkin_subtree_series(k, n)[n], census[k]))
        total = sum(mz.motzkin_subtree_series(k, n)[n] for k in range(1, n + 1))
        pairs.append((f"n={n} sum_k", total, n * t[n]))
    out.append(Check("motzkin subtree series vs census", *_ok(pairs)))
    out.append(_zero("T - x(1 + T + T^2)", mz.motzkin_residual(order)))
    return out


def run_checks(family: str = "all", n_max: int | None = None) -> list[Check]:
    checks = []
    if family in ("schroeder", "all"):
        checks += schroeder_checks(n_max or 7)
    if family in ("motzkin", "all"):
        checks += motzkin_checks(n_max or 12)
    if not checks:
        raise ValueError(f"unknown family {family!r}")
    return checks


def _ok(pairs) -> tuple[bool, str]:
    msg = _first_mismatch(pairs)
    return (not msg, msg or f"{len(pairs)} values agree")


def _zero(name: str, residual: UniSeries) -> Check:
    return Check(f"{name} == 0", residual.is_zero(), f"to order {residual.order}")
