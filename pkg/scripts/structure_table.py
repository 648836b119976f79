"""Invariant factors of the graph group and its closed quotient, both routes, with timings.

    python3 scripts/structure_table.py --max-genus 4
"""

import argparse
import time
from dataclasses import dataclass

from hcyl.invariants import structure


@dataclass
class TableConfig:
    max_genus: int = 3


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-genus", type=int, default=TableConfig.max_genus)
    cfg = TableConfig(max_genus=p.parse_args().max_genus)

    print(f"{'g':>2} {'case':<9} {'rank':>5} {'#Z/2':>5} {'agree':>6} {'expected':>9} {'secs':>6}")
    for g in range(cfg.max_genus + 1):
        for case in ("boundary", "closed"):
            t0 = time.perf_counter()
            rep = structure(g, case)
            dt = time.perf_counter() - t0
            rank, tors = rep.pullback
            print(
                f"{g:>2} {case:<9} {rank:>5} {len(tors):>5} {str(rep.agree):>6} "
                f"{str(rep.matches_expected):>9} {dt:>6.2f}"
            )


if __name__ == "__main__":
    main()
