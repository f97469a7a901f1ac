"""Tabulate c in omega_l gamma_l = c * gamma_{l+2} omega_{l+2} for normalized adjacent maps."""

import argparse
from dataclasses import dataclass
from typing import Tuple

from tlzero.standard import adjacent_maps


@dataclass
class RatioConfig:
    ns: Tuple[int, ...] = (4, 6, 8)


def main(cfg: RatioConfig) -> None:
    for n in cfg.ns:
        ratios = adjacent_maps(n).ratios
        row = ", ".join(f"ell={l}: {c}" for l, c in sorted(ratios.items())) or "(no interior level)"
        print(f"n={n}: {row}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("ns", nargs="*", type=int, default=[4, 6, 8])
    main(RatioConfig(tuple(p.parse_args().ns)))
