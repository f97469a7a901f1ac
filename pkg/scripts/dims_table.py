"""Print dim W, dim P, dim L and Catalan numbers for a range of n."""

import argparse
from dataclasses import dataclass

from tlzero.cli import dims_report


@dataclass
class TableConfig:
    lo: int = 1
    hi: int = 10
    nmax_projective: int = 8


def main(cfg: TableConfig) -> None:
    rep, rows = dims_report(range(cfg.lo, cfg.hi + 1), cfg.nmax_projective)
    print("\n".join(rows))
    print(f"all dimension claims hold: {rep.passed}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--lo", type=int, default=1)
    p.add_argument("--hi", type=int, default=10)
    p.add_argument("--nmax-projective", type=int, default=8)
    main(TableConfig(**vars(p.parse_args())))
