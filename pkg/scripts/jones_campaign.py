"""Random-braid campaign for the t = -1 character identity, with a per-n summary."""

import argparse
import random
from dataclasses import dataclass

from tlzero.jones import format_in_t, jones_polynomial, random_braid, verify_alternating_identity


@dataclass
class JonesConfig:
    n_values: tuple = (2, 3, 4, 5, 6)
    count: int = 200
    max_len: int = 12
    seed: int = 0
    show: int = 3


def main(cfg: JonesConfig) -> None:
    for n in cfg.n_values:
        rng = random.Random(cfg.seed * 1000 + n)
        fails = 0
        for k in range(cfg.count):
            w = random_braid(n, cfg.max_len, rng)
            if not verify_alternating_identity(w).passed:
                fails += 1
            if k < cfg.show:
                print(f"  n={n} [{w}] V = {format_in_t(jones_polynomial(w))}")
        print(f"n={n}: {cfg.count} braids, {fails} failures")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-len", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    main(JonesConfig(count=a.count, max_len=a.max_len, seed=a.seed))
