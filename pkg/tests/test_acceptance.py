"""Acceptance criteria, one test each. A PASS/FAIL line per criterion is
printed in the terminal summary."""

import io
import json
import time
from collections import Counter
from fractions import Fraction

import mpmath

from conftest import ACCEPTANCE_LINES
from schroeder_subtrees import limits, motzkin, oracle
from schroeder_subtrees import schroeder as sc
from schroeder_subtrees.cli import run
from schroeder_subtrees.limits import BenderInput, bender_limit
from schroeder_subtrees.sampler import monte_carlo_census, sample_many
from schroeder_subtrees.scalar import QuadExt, quad_to_decimal
from schroeder_subtrees.series import Polynomial, RationalFunction

CHI2_999_DF44 = 78.7


def report(number: int, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_01_root_polynomial_table():
    expected = ["x", "0", "x^2", "x^3", "2x^3+x^4", "5x^4+x^5", "5x^4+9x^5+x^6"]
    expected_polys = [
        Polynomial([0, 1]),
        Polynomial(),
        Polynomial([0, 0, 1]),
        Polynomial([0, 0, 0, 1]),
        Polynomial([0, 0, 0, 2, 1]),
        Polynomial([0, 0, 0, 0, 5, 1]),
        Polynomial([0, 0, 0, 0, 5, 9, 1]),
    ]
    sc.vertex_bivariate.cache_clear()
    t0 = time.perf_counter()
    got = []
    for k in range(1, 8):
        out = io.StringIO()
        assert run(["rk", "--k", str(k)], stdout=out) == 0
        got.append(json.loads(out.getvalue()))
    elapsed = time.perf_counter() - t0
    ok = (
        [g["polynomial"] for g in got] == expected
        and [sc.subtree_root_poly(k) for k in range(1, 8)] == expected_polys
        and elapsed < 1.0
    )
    report(1, ok, f"R_1..R_7 = {[g['polynomial'] for g in got]} in {elapsed:.3f}s")


def test_02_balanced_root_table():
    x = Polynomial.x()
    expected = [
        RationalFunction(x),
        RationalFunction(x**2, Polynomial([1, -1])),
        RationalFunction(x**4, Polynomial([1, -2, 0, 1])),
        RationalFunction(x**8, Polynomial([1, -4, 4, 2, -5, 2, 1, -1])),
    ]
    sc.balanced_root_ratfun.cache_clear()
    t0 = time.perf_counter()
    got = [sc.balanced_root_ratfun(k) for k in range(4)]
    elapsed = time.perf_counter() - t0
    ok = got == expected and elapsed < 1.0
    report(2, ok, f"B_0*..B_3* = {[g.format() for g in got]} in {elapsed:.3f}s")


def test_03_oracle_equivalence():
    t0 = time.perf_counter()
    mismatches = []
    s, v = sc.schroeder_series(8), sc.vertex_series(8)
    for n in range(1, 9):
        sub = oracle.subtree_census("schroeder", n)
        bal = oracle.balanced_census(n)
        if s[n] != sub.total_trees:
            mismatches.append(("trees", n))
        if v[n] != sub.total_vertices:
            mismatches.append(("vertices", n))
        for k in range(1, 2 * n + 2):
            if sc.subtree_series(k, n)[n] != sub[k]:
                mismatches.append(("subtree", n, k))
        for k in range(0, n + 1):
            if sc.balanced_series(k, n)[n] != bal[k]:
                mismatches.append(("balanced", n, k))
    t = motzkin.motzkin_tree_series(12)
    for n in range(1, 13):
        sub = oracle.subtree_census("motzkin", n)
        if t[n] != sub.total_trees:
            mismatches.append(("motzkin trees", n))
        for k in range(1, n + 2):
            if motzkin.motzkin_subtree_series(k, n)[n] != sub[k]:
                mismatches.append(("motzkin subtree", n, k))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 120
    report(3, ok, f"series == census for Schroeder n<=8, Motzkin n<=12; mismatches={mismatches[:5]} in {elapsed:.1f}s")


def test_04_functional_equation_residuals():
    t0 = time.perf_counter()
    checks = {
        "2S^2-(1+x)S+x": sc.schroeder_residual(200).is_zero(),
        "V-xy-yV^2/(1-V) (x-order 60)": sc.vertex_bivariate_residual(60).is_zero(),
        "A(2-(1-S)^-2)-1": sc.context_residual(200).is_zero(),
        "T-x(1+T+T^2)": motzkin.motzkin_residual(200).is_zero(),
    }
    elapsed = time.perf_counter() - t0
    ok = all(checks.values()) and elapsed < 60
    report(4, ok, f"{checks} in {elapsed:.1f}s")


def test_05_limit_convergence():
    t0 = time.perf_counter()
    n_list = [100, 200, 500, 1000]
    details, ok = [], True
    for k, lim in ((1, QuadExt(2, -1)), (3, QuadExt(10, -7))):
        errs = [abs(QuadExt.coerce(sc.finite_probability(k, n)) - lim) for n in n_list]
        decreasing = all(a > b for a, b in zip(errs, errs[1:]))
        small = errs[-1] <= Fraction(1, 100)
        ok = ok and decreasing and small
        details.append(f"k={k} errors {[quad_to_decimal(e, 6) for e in errs]}")
    assert sc.vertex_series(1000).order >= 1000
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 300
    report(5, ok, "; ".join(details) + f" in {elapsed:.1f}s")


def test_06_discrepancy_audit():
    (leaf,) = limits.paper_discrepancy_report("leaf")
    leaf_ok = leaf.ratio == 2
    failures = []
    rows = {r.k: r for r in limits.paper_discrepancy_report("subtree")}
    brows = {r.k: r for r in limits.paper_discrepancy_report("balanced")}
    checks = [("subtree", k, rows[k]) for k in (3, 4, 5, 6, 7)] + [("balanced", k, brows[k]) for k in (1, 2)]
    parts = []
    for table, k, row in checks:
        twice = 2 * Fraction(row.paper)
        rel = abs(row.computed - twice) / twice
        parts.append(f"{table} k={k} rel.dev {quad_to_decimal(rel, 4)}")
        if rel > Fraction(1, 100):
            failures.append(f"{table} k={k}: computed {quad_to_decimal(row.computed, 6)} vs 2x{row.paper}")
    ok = leaf_ok and not failures
    report(6, ok, f"leaf ratio exactly 2: {leaf_ok}; {', '.join(parts)}; outside 1%: {failures}")


def test_07_motzkin_tightness():
    total, prev, increasing, matches = Fraction(0), Fraction(0), True, True
    for k in range(1, 41):
        term = motzkin.motzkin_limit_probability(k)
        via_bender = bender_limit(BenderInput(Polynomial.monomial(k, motzkin.motzkin_count(k)), Fraction(1, 3)))
        matches = matches and term == via_bender
        total += term
        increasing = increasing and total > prev
        prev = total
    ok = total >= Fraction(99, 100) and increasing and matches
    report(
        7,
        ok,
        f"sum_(k<=40) M_k 3^-k = {quad_to_decimal(total, 6)} (need >= 0.99); "
        f"increasing={increasing}; terms == bender_limit: {matches}",
    )


def test_08_schroeder_tightness():
    t0 = time.perf_counter()
    cert = limits.lemma_closed_form_at_singularity()
    cert_ok = cert == QuadExt(1, Fraction(-1, 2)) == limits.schroeder_at_singularity()
    sums = limits.partial_sums("schroeder", 500)
    # P(2) = 0 exactly since no tree has two vertices; every other increment is positive
    increments = [sums[0]] + [b - a for a, b in zip(sums, sums[1:])]
    increasing = increments[1] == 0 and all(d.sign() > 0 for i, d in enumerate(increments) if i != 1)
    enough = sums[-1] >= Fraction(95, 100)
    elapsed = time.perf_counter() - t0
    ok = cert_ok and increasing and enough and elapsed < 600
    report(
        8,
        ok,
        f"R(rho,1) == S(rho) == (2-sqrt2)/2: {cert_ok}; sum_(k<=500) = {quad_to_decimal(sums[-1], 6)}; "
        f"strictly increasing except P(2)=0: {increasing}; {elapsed:.1f}s",
    )


def test_09_asymptotic_corollaries():
    parts, ok = [], True
    with mpmath.workdps(30):
        for which in ("trees", "leaves", "vertices"):
            r100 = sc.asymptotic_ratio(which, 100)
            r1000 = sc.asymptotic_ratio(which, 1000)
            e100, e1000 = abs(r100 - 1), abs(r1000 - 1)
            ok = ok and e100 <= 0.05 and e1000 <= 0.01 and e1000 < e100
            parts.append(f"{which}: {mpmath.nstr(r100, 6)} @100, {mpmath.nstr(r1000, 6)} @1000")
    report(9, ok, "; ".join(parts))


def test_10_sampler():
    t0 = time.perf_counter()
    draws = 100_000
    counts = Counter(sample_many(5, draws, seed=2024))
    expected = draws / 45
    chi2 = sum((counts[t] - expected) ** 2 / expected for t in oracle.enumerate_trees("schroeder", 5))
    est = monte_carlo_census(50, 20_000, seed=50, statistic="leaf")
    exact = float(sc.finite_probability(1, 50))
    z = abs(est.estimate - exact) / est.stderr
    elapsed = time.perf_counter() - t0
    ok = chi2 < CHI2_999_DF44 and z < 5 and elapsed < 120
    report(
        10,
        ok,
        f"chi2(44 df) = {chi2:.1f} < {CHI2_999_DF44}; leaf fraction n=50 {est.estimate:.5f} vs exact "
        f"{exact:.5f} ({z:.2f} SE); {elapsed:.1f}s",
    )
