"""Command-line entry point.

Output is JSON (compact, fixed key order) or CSV on stdout. Exit status: 0 on
success, 1 when ``verify`` finds a mismatch, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import mpmath

from . import limits, motzkin, oracle, sampler, schroeder
from .scalar import quad_to_decimal, rational_to_decimal
from .verify import run_checks

DIGITS = 12


class UsageError(Exception):
    pass


def _coeffs(series) -> list[str]:
    return [str(c) for c in series.coeffs]


def _series(args):
    fam, kind, order, k = args.family, args.kind, args.order, args.k
    if kind in ("subtree", "balanced") and k is None:
        raise UsageError(f"--kind {kind} needs --k")
    if fam == "schroeder":
        table = {
            "trees": lambda: schroeder.schroeder_series(order),
            "context": lambda: schroeder.context_series(order),
            "vertices": lambda: schroeder.vertex_series(order),
            "leaves": lambda: schroeder.leaf_series(order),
            "subtree": lambda: schroeder.subtree_series(k, order),
            "balanced": lambda: schroeder.balanced_series(k, order),
        }
    else:
        table = {
            "trees": lambda: motzkin.motzkin_tree_series(order),
            "context": lambda: motzkin.motzkin_context_series(order),
            "vertices": lambda: motzkin.motzkin_vertex_series(order),
            "subtree": lambda: motzkin.motzkin_subtree_series(k, order),
        }
    if kind not in table:
        raise UsageError(f"--kind {kind} is not available for {fam}")
    s = table[kind]()
    out = {"family": fam, "kind": kind}
    if kind in ("subtree", "balanced"):
        out["k"] = k
    out["order"] = order
    out["coefficients"] = _coeffs(s)
    rows = [{"n": n, "coefficient": c} for n, c in enumerate(out["coefficients"])]
    return out, rows


def _rk(args):
    ks = [args.k] if args.k is not None else list(range(1, args.k_max + 1))
    rows = []
    for k in ks:
        p = schroeder.subtree_root_poly(k)
        rows.append({"k": k, "polynomial": p.format(), "coefficients": [str(c) for c in p.coeffs]})
    out = rows[0] if args.k is not None else {"rows": rows}
    return out, [{"k": r["k"], "polynomial": r["polynomial"]} for r in rows]


def _table(args):
    which = args.which
    k_max = args.k_max if args.k_max is not None else (7 if which == "subtree" else 3)
    k_min = 1 if which == "subtree" else 0
    rows = []
    for k in range(k_min, k_max + 1):
        gf = schroeder.subtree_root_poly(k) if which == "subtree" else schroeder.balanced_root_ratfun(k)
        row = {"k": k, "root_gf": gf.format()}
        if args.at_n is not None:
            if which == "subtree":
                p = schroeder.finite_probability(k, args.at_n)
            else:
                p = schroeder.finite_balanced_probability(k, args.at_n)
            row.update({"exact": str(p), "decimal": rational_to_decimal(p, DIGITS)})
        else:
            lim = limits.limit_subtree_probability(k) if which == "subtree" else limits.limit_balanced_probability(k)
            row.update(lim.to_json(DIGITS))
        rows.append(row)
    out = {"table": which, "mode": "at_n" if args.at_n is not None else "limit"}
    if args.at_n is not None:
        out["n"] = args.at_n
    out["rows"] = rows
    return out, rows


def _verify(args):
    checks = run_checks(args.family, args.n_max)
    ok = all(c.ok for c in checks)
    out = {"family": args.family, "n_max": args.n_max, "ok": ok, "checks": [c.to_json() for c in checks]}
    return out, [c.to_json() for c in checks], 0 if ok else 1


def _sample(args):
    if args.stat:
        est = sampler.monte_carlo_census(args.leaves, args.count, args.seed, args.stat)
        out = est.to_json()
        return out, [out]
    trees = sampler.sample_many(args.leaves, args.count, args.seed)
    strings = [oracle.to_brackets(t) for t in trees]
    out = {"leaves": args.leaves, "count": args.count, "seed": args.seed, "trees": strings}
    return out, [{"index": i, "tree": t} for i, t in enumerate(strings)]


def _convergence(args):
    kind, k = sampler.parse_statistic(args.stat)
    n_list = [int(x) for x in args.n_list.split(",") if x]
    rows = []
    for row in limits.convergence(kind, k, n_list):
        rows.append(
            {
                "n": row.n,
                "finite": rational_to_decimal(row.finite, DIGITS),
                "limit": quad_to_decimal(row.limit, DIGITS),
                "abs_error": quad_to_decimal(row.error, DIGITS),
            }
        )
    return {"statistic": args.stat, "rows": rows}, rows


def _asym(args):
    with mpmath.workdps(30):
        est = schroeder.asymptotic_estimate(args.which, args.n)
        exact = schroeder.exact_count(args.which, args.n)
        ratio = est / mpmath.mpf(exact)
        out = {
            "which": args.which,
            "n": args.n,
            "estimate": mpmath.nstr(est, 15),
            "exact": str(exact),
            "ratio": mpmath.nstr(ratio, 12),
        }
    return out, [out]


def _discrepancy(args):
    rows = [r.to_json() for r in limits.paper_discrepancy_report(args.table)]
    flat = [
        {
            "k": r["k"],
            "rational_part": r["computed"]["rational_part"],
            "sqrt2_coefficient": r["computed"]["sqrt2_coefficient"],
            "computed": r["computed"]["decimal"],
            "paper": r["paper"],
            "ratio_decimal": r["ratio_decimal"],
        }
        for r in rows
    ]
    return {"table": args.table, "rows": rows}, flat


def _census(args):
    if args.stat == "balanced":
        if args.family != "schroeder":
            raise UsageError("balanced census is only defined for schroeder")
        tables = [oracle.balanced_census(n) for n in range(1, args.n + 1)]
    else:
        tables = [oracle.subtree_census(args.family, n) for n in range(1, args.n + 1)]
    rows = [dict(zip(("family", "n", "statistic", "k", "count"), r)) for t in tables for r in t.rows()]
    for r in rows:
        r["count"] = str(r["count"])
    return {"family": args.family, "statistic": args.stat, "rows": rows}, rows


def _tightness(args):
    sums = limits.partial_sums(args.family, args.k_max)
    rows = []
    prev = 0
    for k, total in enumerate(sums, start=1):
        rows.append(
            {
                "k": k,
                "probability": quad_to_decimal(total - prev, DIGITS),
                "partial_sum": quad_to_decimal(total, DIGITS),
            }
        )
        prev = total
    out = {"family": args.family, "k_max": args.k_max, "rows": rows}
    if args.family == "schroeder":
        cert = limits.lemma_closed_form_at_singularity()
        out["certificate"] = {
            "closed_form_at_rho": cert.to_json(DIGITS),
            "equals_S_at_rho": cert == limits.schroeder_at_singularity(),
        }
    return out, rows


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schroeder-subtrees", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("series", help="coefficients of a generating function")
    sp.add_argument("--family", choices=("schroeder", "motzkin"), default="schroeder")
    sp.add_argument(
        "--kind", choices=("trees", "context", "vertices", "leaves", "subtree", "balanced"), default="trees"
    )
    sp.add_argument("--order", type=int, default=64)
    sp.add_argument("--k", type=int)
    fmt(sp)
    sp.set_defaults(func=_series)

    sp = sub.add_parser("rk", help="R_k(x), trees with k vertices counted by leaves")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=int)
    g.add_argument("--k-max", type=int)
    fmt(sp)
    sp.set_defaults(func=_rk)

    sp = sub.add_parser("table", help="subtree-size or balanced-rank probability table")
    sp.add_argument("which", choices=("subtree", "balanced"))
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--limit", action="store_true")
    g.add_argument("--at-n", type=int)
    sp.add_argument("--k-max", type=int)
    fmt(sp)
    sp.set_defaults(func=_table)

    sp = sub.add_parser("verify", help="check series against enumeration and identities")
    sp.add_argument("--family", choices=("schroeder", "motzkin", "all"), default="all")
    sp.add_argument("--n-max", type=int)
    fmt(sp)
    sp.set_defaults(func=_verify)

    sp = sub.add_parser("sample", help="uniform random Schroeder trees")
    sp.add_argument("--leaves", type=int, required=True)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--stat")
    fmt(sp)
    sp.set_defaults(func=_sample)

    sp = sub.add_parser("convergence", help="finite-n probabilities against the limit")
    sp.add_argument("--stat", default="leaf")
    sp.add_argument("--n-list", default="100,200,500,1000")
    fmt(sp)
    sp.set_defaults(func=_convergence)

    sp = sub.add_parser("asym", help="asymptotic estimate against the exact count")
    sp.add_argument("--which", choices=("trees", "leaves", "vertices"), required=True)
    sp.add_argument("--n", type=int, required=True)
    fmt(sp)
    sp.set_defaults(func=_asym)

    sp = sub.add_parser("discrepancy", help="computed limits against the printed tables")
    sp.add_argument("--table", choices=("subtree", "balanced", "leaf", "leaf_corollary"), required=True)
    fmt(sp)
    sp.set_defaults(func=_discrepancy)

    sp = sub.add_parser("census", help="brute-force census by subtree size or balanced rank")
    sp.add_argument("--family", choices=("schroeder", "motzkin"), default="schroeder")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--stat", choices=("subtree", "balanced"), default="subtree")
    sp.add_argument("--format", choices=("json", "csv"), default="csv")
    sp.set_defaults(func=_census)

    sp = sub.add_parser("tightness", help="partial sums of the limit probabilities")
    sp.add_argument("--family", choices=("schroeder", "motzkin"), default="schroeder")
    sp.add_argument("--k-max", type=int, default=40)
    fmt(sp)
    sp.set_defaults(func=_tightness)
    return p


def _write_csv(rows: list[dict], stream) -> None:
    if not rows:
        return
    w = csv.DictWriter(stream, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        result = args.func(args)
    except (UsageError, ValueError) as e:
        print(f"{parser.prog}: error: {e}", file=stderr)
        return 2
    out, rows, *rest = result
    code = rest[0] if rest else 0
    if args.format == "csv":
        buf = io.StringIO()
        _write_csv(rows, buf)
        stdout.write(buf.getvalue())
    else:
        stdout.write(json.dumps(out, separators=(",", ":")) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
