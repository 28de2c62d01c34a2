"""Exact limits next to the printed four-digit tables, with their ratios."""

from dataclasses import dataclass

from schroeder_subtrees.limits import paper_discrepancy_report
from schroeder_subtrees.scalar import quad_to_decimal


@dataclass
class Config:
    tables: tuple = ("leaf", "subtree", "balanced")
    digits: int = 8


def main(cfg: Config):
    for table in cfg.tables:
        print(f"[{table}]")
        for row in paper_discrepancy_report(table):
            ratio = "-" if row.ratio is None else quad_to_decimal(row.ratio, 4)
            print(f"  k={row.k:<2} exact={str(row.computed):<28} ~ {quad_to_decimal(row.computed, cfg.digits)}"
                  f"  printed={row.paper:<9} ratio={ratio}")


if __name__ == "__main__":
    main(Config())
