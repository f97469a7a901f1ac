"""Show every rewrite step when resolving a tableau polynomial into planar diagrams."""

import argparse
from dataclasses import dataclass
from typing import Tuple

from tlzero.diagrams import render_ascii
from tlzero.specht import G_map, TwoRowTableau, resolve_to_noncrossing, tableau_polynomial


@dataclass
class TraceConfig:
    top: Tuple[int, ...] = (1, 2, 5, 3, 8)
    bottom: Tuple[int, ...] = (4, 6, 7)
    draw: bool = False


def main(cfg: TraceConfig) -> None:
    t = TwoRowTableau(cfg.top, cfg.bottom)
    print(f"F_t = {tableau_polynomial(t)}")
    res = resolve_to_noncrossing(t, keep_trace=True)
    for cur, a, b in res.trace:
        print(f"{cur} -> {a} + {b}")
    print(f"{len(res.diagrams)} planar diagrams after {res.steps} rewrites:")
    for x in res.diagrams:
        print(f"  cups {x.cups()}  G = {G_map(x)}")
        if cfg.draw:
            print(render_ascii(x))


def _ints(text: str) -> Tuple[int, ...]:
    return tuple(int(v) for v in text.split(","))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--top", type=_ints, default=TraceConfig.top)
    p.add_argument("--bottom", type=_ints, default=TraceConfig.bottom)
    p.add_argument("--draw", action="store_true")
    main(TraceConfig(**vars(p.parse_args())))
