"""Finite-n subtree probabilities against their limits.

    python scripts/convergence.py --k 1 3 5 --n 100 200 500 1000
"""

import argparse
from dataclasses import dataclass, field

from schroeder_subtrees.limits import convergence
from schroeder_subtrees.scalar import quad_to_decimal


@dataclass
class Config:
    ks: list = field(default_factory=lambda: [1, 3])
    ns: list = field(default_factory=lambda: [100, 200, 500, 1000])
    statistic: str = "subtree"
    digits: int = 8


def main(cfg: Config):
    print(f"{'k':>3} {'n':>6} {'finite':>12} {'limit':>12} {'abs error':>12} {'n * error':>10}")
    for k in cfg.ks:
        for row in convergence(cfg.statistic, k, cfg.ns):
            err = row.error
            print(
                f"{k:>3} {row.n:>6} {quad_to_decimal(row.finite, cfg.digits):>12} "
                f"{quad_to_decimal(row.limit, cfg.digits):>12} {quad_to_decimal(err, cfg.digits):>12} "
                f"{float(err) * row.n:>10.4f}"
            )


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, nargs="+", default=Config().ks)
    ap.add_argument("--n", type=int, nargs="+", default=Config().ns)
    ap.add_argument("--statistic", choices=("subtree", "balanced"), default="subtree")
    a = ap.parse_args()
    main(Config(ks=a.k, ns=a.n, statistic=a.statistic))
