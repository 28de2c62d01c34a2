"""Chi-squared uniformity of the sampler and a Monte Carlo leaf fraction."""

import argparse
from collections import Counter
from dataclasses import dataclass

from schroeder_subtrees.oracle import enumerate_trees
from schroeder_subtrees.sampler import monte_carlo_census, sample_many
from schroeder_subtrees.schroeder import finite_probability


@dataclass
class Config:
    small_n: int = 5
    draws: int = 100_000
    mc_n: int = 50
    mc_trials: int = 20_000
    seed: int = 0


def main(cfg: Config):
    trees = enumerate_trees("schroeder", cfg.small_n)
    counts = Counter(sample_many(cfg.small_n, cfg.draws, cfg.seed))
    e = cfg.draws / len(trees)
    chi2 = sum((counts[t] - e) ** 2 / e for t in trees)
    print(f"n={cfg.small_n}: {len(trees)} cells, chi2={chi2:.2f} on {len(trees) - 1} df")
    est = monte_carlo_census(cfg.mc_n, cfg.mc_trials, cfg.seed, "leaf")
    exact = float(finite_probability(1, cfg.mc_n))
    print(f"n={cfg.mc_n}: leaf fraction {est.estimate:.5f} +- {est.stderr:.5f}, exact {exact:.5f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--draws", type=int, default=Config.draws)
    a = ap.parse_args()
    main(Config(seed=a.seed, draws=a.draws))
