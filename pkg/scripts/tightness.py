"""Partial sums of the limit probabilities, for both families.

The Schroeder tail shrinks like K^(-1/2) as well, so the sums creep toward 1.
"""

import argparse
from dataclasses import dataclass

from schroeder_subtrees.limits import lemma_closed_form_at_singularity, partial_sums, schroeder_at_singularity
from schroeder_subtrees.scalar import quad_to_decimal


@dataclass
class Config:
    k_max: int = 500
    checkpoints: tuple = (1, 10, 40, 100, 200, 500)


def main(cfg: Config):
    cert = lemma_closed_form_at_singularity()
    print(f"closed form at rho: {cert}  equals S(rho): {cert == schroeder_at_singularity()}")
    for family in ("schroeder", "motzkin"):
        sums = partial_sums(family, cfg.k_max)
        for k in cfg.checkpoints:
            if k <= cfg.k_max:
                tail = 1 - sums[k - 1]
                print(f"{family:>9} K={k:>4} sum={quad_to_decimal(sums[k - 1], 10)} "
                      f"tail*sqrt(K)={float(tail) * k ** 0.5:.4f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--k-max", type=int, default=Config.k_max)
    a = ap.parse_args()
    main(Config(k_max=a.k_max))
