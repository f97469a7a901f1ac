"""Run the full verification campaign and write the JSON report."""

import argparse
import sys
from dataclasses import asdict, dataclass
from typing import Optional

from tlzero.cli import full_campaign


@dataclass
class CampaignConfig:
    nmax: Optional[int] = None
    seed: int = 0
    json_path: str = "report.json"
    timing: bool = False


def main(cfg: CampaignConfig) -> int:
    campaign, params = full_campaign(cfg.nmax, cfg.seed)
    rep = campaign.run(timing=cfg.timing,
                       progress=lambda name, r, ms: print(f"{name}: {len(r.claims)} claims"
                                                          + (f", {ms:.0f} ms" if ms is not None else "")))
    with open(cfg.json_path, "w") as fh:
        fh.write(rep.dumps(params | {"config": asdict(cfg)}, timing=cfg.timing) + "\n")
    fails = rep.failures()
    for c in rep.sorted_claims():
        if not c.passed:
            print(c.line())
    print(f"{len(rep.claims)} claims, {len(fails)} failed; report in {cfg.json_path}")
    return 0 if not fails else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--nmax", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", dest="json_path", default="report.json")
    p.add_argument("--timing", action="store_true")
    sys.exit(main(CampaignConfig(**vars(p.parse_args()))))
